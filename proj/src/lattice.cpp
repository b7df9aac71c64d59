#include "dsmt/lattice.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "dsmt/error.hpp"

namespace dsmt {

struct Lattice::IndexCache {
  std::once_flag once;
  std::vector<std::uint32_t> by_mask;  // lattice indices sorted by mask value
};

namespace {

std::uint64_t generator_bits(const EncodingBasis& basis, int k) {
  std::uint64_t bits = 0;
  for (const auto& part : basis.parts()) {
    if ((part.indices >> (k - 1)) & 1U) bits |= std::uint64_t{1} << part.position;
  }
  return bits;
}

// --- expression parsing -----------------------------------------------------

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::vector<std::uint64_t> generators)
      : text_(text), generators_(std::move(generators)) {}

  std::uint64_t parse() {
    const std::uint64_t value = parse_union();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  std::uint64_t parse_union() {
    std::uint64_t value = parse_intersection();
    while (consume_union()) value |= parse_intersection();
    return value;
  }

  std::uint64_t parse_intersection() {
    std::uint64_t value = parse_atom();
    while (consume_intersection()) value &= parse_atom();
    return value;
  }

  std::uint64_t parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (text_[pos_] == '(') {
      ++pos_;
      const std::uint64_t value = parse_union();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return value;
    }
    if (consume("\xE2\x88\x85")) return 0;  // empty-set sign
    consume("\xCE\xB8") || consume("t");     // optional theta prefix
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a generator digit");
    }
    const int k = text_[pos_++] - '0';
    if (k == 0) return 0;
    if (k > static_cast<int>(generators_.size())) fail("generator outside the frame");
    return generators_[k - 1];
  }

  bool consume_union() {
    skip_space();
    return consume("|") || consume("v") || consume("\xE2\x88\xAA");
  }

  bool consume_intersection() {
    skip_space();
    return consume("&") || consume("^") || consume("\xE2\x88\xA9");
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse expression '" + std::string(text_) + "': " + what +
                          " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::vector<std::uint64_t> generators_;
  std::size_t pos_ = 0;
};

// --- pretty labels ----------------------------------------------------------

// Free-model elements for n <= 3, listed in r^iso order.
constexpr std::array<std::string_view, 2> kPretty1 = {"0", "1"};
constexpr std::array<std::string_view, 5> kPretty2 = {"0", "1&2", "2", "1", "1|2"};
constexpr std::array<std::string_view, 19> kPretty3 = {
    "0",         "1&2&3",     "2&3", "1&3",       "(1|2)&3", "3",   "1&2",
    "(1|3)&2",   "(2|3)&1",   "((1&2)|3)&(1|2)",  "(1&2)|3", "2",   "(1&3)|2",
    "2|3",       "1",         "(2&3)|1",          "1|3",     "1|2", "1|2|3"};

std::string prettify(std::string_view expr) {
  std::string out;
  for (char c : expr) {
    if (c == '&') {
      out += "\xE2\x88\xA9";
    } else if (c == '|') {
      out += "\xE2\x88\xAA";
    } else if (c == '0') {
      out += "\xE2\x88\x85";
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      out += "\xCE\xB8";
      out += c;
    } else {
      out += c;
    }
  }
  return out;
}

const std::unordered_map<std::uint64_t, std::string>& free_pretty_table(int n) {
  static const auto tables = [] {
    std::array<std::unordered_map<std::uint64_t, std::string>, 4> t;
    auto fill = [&](int n, auto const& exprs) {
      const auto basis = build_basis(n, FrameModel::free(n));
      std::vector<std::uint64_t> gens;
      for (int k = 1; k <= n; ++k) gens.push_back(generator_bits(basis, k));
      for (std::string_view e : exprs) t[n].emplace(ExpressionParser(e, gens).parse(), prettify(e));
    };
    t[0].emplace(0, prettify("0"));
    fill(1, kPretty1);
    fill(2, kPretty2);
    fill(3, kPretty3);
    return t;
  }();
  return tables.at(n);
}

void check_isotone_range(int n, bool allow_large) {
  const int cap = allow_large ? kMaxHyperFrameSize : kDefaultMaxIsotoneFrameSize;
  if (n < 0 || n > cap) {
    throw InvalidArgument("isotone generation supports n in 0.." + std::to_string(cap) +
                          (allow_large ? "" : " (n = 6 needs the explicit opt-in)"));
  }
}

}  // namespace

Lattice::Lattice(FrameModel model, EncodingBasis basis, std::vector<std::uint64_t> masks,
                 LatticeSource source, std::vector<std::uint64_t> origin_masks)
    : model_(std::move(model)),
      basis_(std::move(basis)),
      masks_(std::move(masks)),
      source_(source),
      origin_masks_(std::move(origin_masks)),
      cache_(std::make_shared<IndexCache>()) {
  if (masks_.empty() || masks_.front() != 0) {
    throw InvalidArgument("lattice must start with the empty set");
  }
  if (!origin_masks_.empty() && origin_masks_.size() != masks_.size()) {
    throw InvalidArgument("origin masks misaligned with elements");
  }
}

ElementMask Lattice::element(std::size_t i) const {
  return {masks_.at(i), static_cast<std::uint8_t>(width())};
}

const Lattice::IndexCache& Lattice::index_cache() const {
  std::call_once(cache_->once, [this] {
    auto& idx = cache_->by_mask;
    idx.resize(masks_.size());
    std::iota(idx.begin(), idx.end(), std::uint32_t{0});
    std::sort(idx.begin(), idx.end(),
              [this](std::uint32_t a, std::uint32_t b) { return masks_[a] < masks_[b]; });
  });
  return *cache_;
}

std::optional<std::size_t> Lattice::index_of(ElementMask e) const {
  if (e.width != width()) return std::nullopt;
  const auto& idx = index_cache().by_mask;
  auto it = std::lower_bound(idx.begin(), idx.end(), e.bits,
                             [this](std::uint32_t i, std::uint64_t bits) { return masks_[i] < bits; });
  if (it == idx.end() || masks_[*it] != e.bits) return std::nullopt;
  return *it;
}

std::size_t Lattice::require_index(ElementMask e) const {
  if (auto i = index_of(e)) return *i;
  throw InvalidArgument("mask " + std::to_string(e.bits) + " is not an element of this lattice");
}

ElementMask Lattice::generator(int k) const {
  if (k < 1 || k > n()) throw InvalidArgument("generator index out of range");
  return {generator_bits(basis_, k), static_cast<std::uint8_t>(width())};
}

std::vector<std::uint8_t> Lattice::dn_row(std::size_t i) const {
  const std::uint64_t bits = masks_.at(i);
  std::vector<std::uint8_t> row(basis_.dimension());
  for (std::size_t p = 0; p < row.size(); ++p) row[p] = (bits >> p) & 1U;
  return row;
}

std::string Lattice::label(std::size_t i) const {
  const std::uint64_t bits = masks_.at(i);
  std::string out = "{";
  for (const auto& part : basis_.parts()) {
    if (((bits >> part.position) & 1U) == 0) continue;
    if (out.size() > 1) out += ',';
    out += part.code();
  }
  return out + "}";
}

std::string Lattice::pretty_label(std::size_t i) const {
  const std::uint64_t bits = masks_.at(i);
  if (bits == 0) return prettify("0");
  if (model_.kind() == ModelKind::free && n() <= 3) {
    return free_pretty_table(n()).at(bits);
  }
  if (!origin_masks_.empty() && n() <= 3) {
    return free_pretty_table(n()).at(origin_masks_[i]);
  }
  if (model_.kind() == ModelKind::shafer) {
    std::string out;
    for (const auto& part : basis_.parts()) {
      if (((bits >> part.position) & 1U) == 0) continue;
      if (!out.empty()) out += "\xE2\x88\xAA";
      out += "\xCE\xB8" + part.code();
    }
    return out;
  }
  return label(i);
}

bool Lattice::same_elements(const Lattice& other) const {
  if (!(basis_ == other.basis_) || size() != other.size()) return false;
  auto a = masks_;
  auto b = other.masks_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Lattice generate_isotone(int n, bool allow_large) {
  check_isotone_range(n, allow_large);

  // Rows of D_k^c are monotone Boolean functions as truth tables; column c is
  // the input whose set bits name the generators, i.e. the part with index set c.
  std::vector<std::uint64_t> rows = {0, 1};
  unsigned table_width = 1;
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next;
    next.reserve(k + 1 < static_cast<int>(std::size(kHyperPowersetSizes))
                     ? kHyperPowersetSizes[k + 1] + 1
                     : 0);
    for (std::uint64_t low : rows) {
      for (std::uint64_t high : rows) {
        if ((low | high) == high) next.push_back(low | (high << table_width));
      }
    }
    rows = std::move(next);
    table_width *= 2;
  }

  // Drop the constant-one row, then the column of the empty input.
  rows.pop_back();
  for (auto& r : rows) r >>= 1;
  return Lattice(FrameModel::free(n), build_basis(n, FrameModel::free(n)), std::move(rows),
                 LatticeSource::isotone);
}

Lattice generate_closure_oracle(const FrameModel& model) {
  const int n = model.n();
  if (n < 0 || n > kMaxClosureFrameSize) {
    throw InvalidArgument("closure oracle supports n in 0.." + std::to_string(kMaxClosureFrameSize));
  }
  EncodingBasis basis = build_basis(n, model);

  std::vector<std::uint64_t> elements = {0};
  std::unordered_set<std::uint64_t> seen = {0};
  auto add = [&](std::uint64_t m) {
    if (seen.insert(m).second) elements.push_back(m);
  };
  for (int k = 1; k <= n; ++k) add(generator_bits(basis, k));

  // Every new element is combined with everything found before it.
  for (std::size_t i = 1; i < elements.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      const std::uint64_t a = elements[i];
      const std::uint64_t b = elements[j];
      add(a & b);
      add(a | b);
    }
  }
  return Lattice(model, std::move(basis), std::move(elements), LatticeSource::closure);
}

Lattice apply_constraints(const Lattice& free, const FrameModel& model) {
  if (free.model().kind() != ModelKind::free) {
    throw InvalidArgument("constraints must be applied to a free-model lattice");
  }
  if (free.n() != model.n()) throw InvalidArgument("model and lattice frame sizes differ");
  if (model.kind() == ModelKind::free) return free;

  EncodingBasis basis = build_basis(model.n(), model);
  if (model.n() > 0 && basis.dimension() == 0) {
    throw InvalidArgument("constraints force the whole frame empty (exhaustivity violated)");
  }

  // Free position p holds the part with index set p + 1.
  std::vector<int> target(free.basis().dimension(), -1);
  for (const auto& part : basis.parts()) {
    target[part.indices - 1] = static_cast<int>(part.position);
  }

  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> origins;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t m : free.masks()) {
    std::uint64_t projected = 0;
    for (std::size_t p = 0; p < target.size(); ++p) {
      if (target[p] >= 0 && ((m >> p) & 1U)) projected |= std::uint64_t{1} << target[p];
    }
    if (seen.insert(projected).second) {
      masks.push_back(projected);
      origins.push_back(m);
    }
  }
  return Lattice(model, std::move(basis), std::move(masks), LatticeSource::constrained,
                 std::move(origins));
}

Lattice generate_powerset_bibe(int n) {
  if (n < 0 || n > kMaxPowersetFrameSize) {
    throw InvalidArgument("powerset generation supports n in 0.." +
                          std::to_string(kMaxPowersetFrameSize));
  }
  std::vector<std::uint64_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), std::uint64_t{0});
  auto model = FrameModel::shafer(n);
  auto basis = build_basis(n, model);
  return Lattice(std::move(model), std::move(basis), std::move(masks), LatticeSource::powerset);
}

Lattice generate_lattice(const FrameModel& model, bool allow_large) {
  switch (model.kind()) {
    case ModelKind::shafer:
      return generate_powerset_bibe(model.n());
    case ModelKind::free:
      return generate_isotone(model.n(), allow_large);
    case ModelKind::hybrid:
      break;
  }
  return apply_constraints(generate_isotone(model.n(), allow_large), model);
}

ElementMask parse_expression(std::string_view text, const Lattice& lattice) {
  std::vector<std::uint64_t> gens;
  for (int k = 1; k <= lattice.n(); ++k) gens.push_back(lattice.generator(k).bits);
  return {ExpressionParser(text, std::move(gens)).parse(), static_cast<std::uint8_t>(lattice.width())};
}

}  // namespace dsmt
