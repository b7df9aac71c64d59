#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/element_mask.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/venn.hpp"

namespace dsmt {

enum class OrderKind { iso, cardinality, strength };

OrderKind parse_order_kind(std::string_view text);
std::string to_string(OrderKind kind);

// Number of Venn parts of e under the model its basis was built for.
int dsm_cardinality(ElementMask e);

// Intrinsic informational strength: sum of 1/length over the parts of e.
// Throws InvalidArgument when e is not over `basis`.
Rational strength(ElementMask e, const EncodingBasis& basis);

// Permutation listing lattice indices by rank. Keys are compared exactly; ties
// go to the smaller mask value, so the result is reproducible. iso returns the
// generation order unchanged.
std::vector<std::size_t> total_order(const Lattice& lattice, OrderKind kind);

// True when every strict inclusion A < B puts A at a smaller rank.
bool respects_inclusion(const Lattice& lattice, const std::vector<std::size_t>& order);

struct ClosedFormMismatch {
  GeneratorSet generators = 0;
  bool is_union = false;
  int expected = 0;
  int actual = 0;
};

struct ClosedFormReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<ClosedFormMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

// Checks C(m-fold intersection) = 2^(n-m) and C(m-fold union) = (2^m-1) 2^(n-m)
// for every non-empty subset of generators of the free model.
ClosedFormReport verify_closed_forms(int n);

std::string format_rational(const Rational& r);

}  // namespace dsmt
