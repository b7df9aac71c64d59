#include <doctest.h>

#include <map>
#include <vector>

#include "dsmt/error.hpp"
#include "dsmt/ordering.hpp"
#include "test_support.hpp"

using namespace dsmt;

namespace {

int card(const Lattice& l, const char* expr) { return dsm_cardinality(parse_expression(expr, l)); }

Rational s(const Lattice& l, const char* expr) { return strength(parse_expression(expr, l), l.basis()); }

std::vector<Lattice> small_lattices() {
  std::vector<Lattice> out;
  for (int n = 0; n <= 4; ++n) out.push_back(generate_isotone(n));
  out.push_back(apply_constraints(generate_isotone(3), FrameModel::hybrid(3, {0b101, 0b110, 0b111})));
  out.push_back(apply_constraints(generate_isotone(4), FrameModel::hybrid(4, {0b0011, 0b1100})));
  out.push_back(generate_powerset_bibe(4));
  return out;
}

}  // namespace

TEST_CASE("DSm cardinality on the free n = 3 model") {
  const Lattice l = generate_isotone(3);
  CHECK(card(l, "1") == 4);
  CHECK(card(l, "1&2") == 2);
  CHECK(card(l, "1|2") == 6);
  CHECK(card(l, "((1&2)|3)&(1|2)") == 4);
  CHECK(card(l, "0") == 0);
}

TEST_CASE("DSm cardinality on the constrained model") {
  const Lattice l = apply_constraints(generate_isotone(3), FrameModel::hybrid(3, {0b101, 0b110, 0b111}));
  CHECK(card(l, "3") == 1);
  CHECK(card(l, "1") == 2);
  CHECK(card(l, "1|2|3") == 4);
  CHECK(card(l, "0") == 0);
}

TEST_CASE("strength values") {
  const Lattice two = generate_isotone(2);
  CHECK(s(two, "0") == Rational(0));
  CHECK(s(two, "1&2") == Rational(1, 2));
  CHECK(s(two, "1") == Rational(3, 2));
  CHECK(s(two, "2") == Rational(3, 2));
  CHECK(s(two, "1|2") == Rational(5, 2));

  const Lattice three = generate_isotone(3);
  CHECK(s(three, "1&2&3") == Rational(1, 3));
  CHECK(s(three, "1") == Rational(1) + Rational(1, 2) + Rational(1, 2) + Rational(1, 3));
  CHECK(s(three, "1") == Rational(7, 3));

  CHECK_THROWS_AS(strength(two.generator(1), three.basis()), InvalidArgument);
  CHECK(format_rational(Rational(7, 3)) == "7/3");
  CHECK(format_rational(Rational(2)) == "2");
}

TEST_CASE("strength of the whole frame is the sum of weights") {
  for (const Lattice& l : small_lattices()) {
    Rational total = 0;
    for (const auto& w : l.basis().weights()) total += w;
    CHECK(strength(l.total(), l.basis()) == total);
  }
}

TEST_CASE("strength equals the D_n row dotted with the weights") {
  for (const Lattice& l : small_lattices()) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      const auto row = l.dn_row(i);
      Rational dot = 0;
      int row_sum = 0;
      for (std::size_t p = 0; p < row.size(); ++p) {
        dot += Rational(row[p]) * l.basis().weights()[p];
        row_sum += row[p];
      }
      CHECK(strength(l.element(i), l.basis()) == dot);
      CHECK(dsm_cardinality(l.element(i)) == row_sum);
    }
  }
}

TEST_CASE("n = 2 strength order") {
  const Lattice l = generate_isotone(2);
  const auto order = total_order(l, OrderKind::strength);
  std::vector<ElementMask> got;
  for (auto i : order) got.push_back(l.element(i));
  const std::vector<ElementMask> expected = {l.empty(), l.generator(1) & l.generator(2), l.generator(1),
                                             l.generator(2), l.total()};
  CHECK(got == expected);
}

TEST_CASE("n = 3 cardinality groups") {
  const Lattice l = generate_isotone(3);
  std::map<int, int> groups;
  int last = -1;
  for (auto i : total_order(l, OrderKind::cardinality)) {
    const int c = dsm_cardinality(l.element(i));
    CHECK(c >= last);
    last = c;
    ++groups[c];
  }
  CHECK(groups == std::map<int, int>{{0, 1}, {1, 1}, {2, 3}, {3, 3}, {4, 4}, {5, 3}, {6, 3}, {7, 1}});
}

TEST_CASE("iso order is the identity") {
  const Lattice l = generate_isotone(3);
  const auto order = total_order(l, OrderKind::iso);
  for (std::size_t r = 0; r < order.size(); ++r) CHECK(order[r] == r);
}

TEST_CASE("generation order is a linear extension of inclusion") {
  for (int n = 0; n <= 5; ++n) {
    const Lattice l = generate_isotone(n, true);
    CHECK(respects_inclusion(l, total_order(l, OrderKind::iso)));
  }
  const Lattice l = generate_isotone(2);
  CHECK_FALSE(respects_inclusion(l, {4, 3, 2, 1, 0}));
}

TEST_CASE("strict inclusion strictly raises strength and cardinality") {
  for (const Lattice& l : small_lattices()) {
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (!is_strict_subset(l.element(a), l.element(b))) continue;
        REQUIRE(strength(l.element(a), l.basis()) < strength(l.element(b), l.basis()));
        REQUIRE(dsm_cardinality(l.element(a)) < dsm_cardinality(l.element(b)));
      }
    }
    CHECK(respects_inclusion(l, total_order(l, OrderKind::strength)));
    CHECK(respects_inclusion(l, total_order(l, OrderKind::cardinality)));
  }
}

TEST_CASE("equal strength never means strict inclusion") {
  for (const Lattice& l : small_lattices()) {
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        if (strength(l.element(a), l.basis()) != strength(l.element(b), l.basis())) continue;
        REQUIRE_FALSE(is_subset(l.element(a), l.element(b)));
        REQUIRE_FALSE(is_subset(l.element(b), l.element(a)));
      }
    }
  }
}

TEST_CASE("orders are permutations with the empty set first and sorted keys") {
  for (const Lattice& l : small_lattices()) {
    for (OrderKind kind : {OrderKind::iso, OrderKind::cardinality, OrderKind::strength}) {
      const auto order = total_order(l, kind);
      std::vector<bool> seen(l.size(), false);
      for (auto i : order) {
        REQUIRE(!seen[i]);
        seen[i] = true;
      }
      CHECK(order.front() == 0);
      if (kind == OrderKind::strength) {
        for (std::size_t r = 1; r < order.size(); ++r) {
          const auto prev = strength(l.element(order[r - 1]), l.basis());
          const auto cur = strength(l.element(order[r]), l.basis());
          CHECK(prev <= cur);
          if (prev == cur) CHECK(l.masks()[order[r - 1]] < l.masks()[order[r]]);
        }
      }
    }
  }
}

TEST_CASE("closed forms for m-fold intersections and unions") {
  for (int n = 1; n <= 5; ++n) {
    const auto report = verify_closed_forms(n);
    CHECK(report.ok());
    CHECK(report.checked == 2 * ((std::size_t{1} << n) - 1));
  }
  const Lattice l = generate_isotone(3);
  CHECK(card(l, "1&2") == 2);
  CHECK(card(l, "1|2") == 6);
  CHECK(card(l, "1&2&3") == 1);
  CHECK(card(l, "1|2|3") == 7);
  CHECK_THROWS_AS(verify_closed_forms(0), InvalidArgument);
}

TEST_CASE("order kind parsing") {
  CHECK(parse_order_kind("card") == OrderKind::cardinality);
  CHECK(parse_order_kind("bibe") == OrderKind::iso);
  CHECK(to_string(OrderKind::strength) == "strength");
  CHECK_THROWS_AS(parse_order_kind("random"), InvalidArgument);
}
