#include "dsmt/ordering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dsmt/error.hpp"

namespace dsmt {

OrderKind parse_order_kind(std::string_view text) {
  if (text == "iso" || text == "bibe") return OrderKind::iso;
  if (text == "card" || text == "cardinality") return OrderKind::cardinality;
  if (text == "strength") return OrderKind::strength;
  throw InvalidArgument("unknown ordering '" + std::string(text) + "' (iso|card|strength)");
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::iso:
      return "iso";
    case OrderKind::cardinality:
      return "card";
    case OrderKind::strength:
      return "strength";
  }
  return "unknown";
}

int dsm_cardinality(ElementMask e) { return e.popcount(); }

Rational strength(ElementMask e, const EncodingBasis& basis) {
  if (e.width != basis.dimension()) {
    throw InvalidArgument("mask width " + std::to_string(e.width) + " does not match basis dimension " +
                          std::to_string(basis.dimension()));
  }
  Rational s = 0;
  for (std::size_t p = 0; p < basis.dimension(); ++p) {
    if (e.test(static_cast<int>(p))) s += basis.weights()[p];
  }
  return s;
}

std::vector<std::size_t> total_order(const Lattice& lattice, OrderKind kind) {
  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (kind == OrderKind::iso) return order;

  const auto masks = lattice.masks();
  if (kind == OrderKind::cardinality) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const int ca = std::popcount(masks[a]);
      const int cb = std::popcount(masks[b]);
      return ca != cb ? ca < cb : masks[a] < masks[b];
    });
    return order;
  }

  // Strength keys scaled to a common denominator so ties compare exactly.
  std::int64_t scale = 1;
  for (const auto& w : lattice.basis().weights()) scale = std::lcm(scale, w.denominator());
  std::vector<std::int64_t> part_units;
  for (const auto& w : lattice.basis().weights()) {
    part_units.push_back(w.numerator() * (scale / w.denominator()));
  }
  std::vector<std::int64_t> keys(lattice.size(), 0);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::uint64_t bits = masks[i]; bits != 0; bits &= bits - 1) {
      keys[i] += part_units[std::countr_zero(bits)];
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] != keys[b] ? keys[a] < keys[b] : masks[a] < masks[b];
  });
  return order;
}

bool respects_inclusion(const Lattice& lattice, const std::vector<std::size_t>& order) {
  const auto masks = lattice.masks();
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (std::size_t c = r + 1; c < order.size(); ++c) {
      const std::uint64_t later = masks[order[c]];
      const std::uint64_t earlier = masks[order[r]];
      if ((later & ~earlier) == 0) return false;  // later is a subset of earlier
    }
  }
  return true;
}

ClosedFormReport verify_closed_forms(int n) {
  if (n < 1 || n > kMaxClosureFrameSize) {
    throw InvalidArgument("closed-form check supports n in 1.." + std::to_string(kMaxClosureFrameSize));
  }
  const Lattice lattice = generate_isotone(n);
  ClosedFormReport report;
  report.n = n;
  for (GeneratorSet set = 1; set < (GeneratorSet{1} << n); ++set) {
    const int m = std::popcount(set);
    ElementMask meet = lattice.total();
    ElementMask join = lattice.empty();
    for (int k = 1; k <= n; ++k) {
      if ((set >> (k - 1)) & 1U) {
        meet = meet & lattice.generator(k);
        join = join | lattice.generator(k);
      }
    }
    const int meet_expected = 1 << (n - m);
    const int join_expected = ((1 << m) - 1) * (1 << (n - m));
    const int meet_actual = lattice.index_of(meet) ? dsm_cardinality(meet) : -1;
    const int join_actual = lattice.index_of(join) ? dsm_cardinality(join) : -1;
    if (meet_actual != meet_expected) report.mismatches.push_back({set, false, meet_expected, meet_actual});
    if (join_actual != join_expected) report.mismatches.push_back({set, true, join_expected, join_actual});
    report.checked += 2;
  }
  return report;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace dsmt
