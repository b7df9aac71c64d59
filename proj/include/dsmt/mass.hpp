#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "dsmt/lattice.hpp"

namespace dsmt {

inline constexpr double kMassTolerance = 1e-12;

// Values indexed by lattice element index (generation order), independent of
// any display ordering.
struct MassVector {
  std::shared_ptr<const Lattice> lattice;
  std::vector<double> values;
  // Set for unnormalized outputs (Smets' rule) that keep mass on the empty set.
  bool allows_empty_mass = false;

  static MassVector zeros(std::shared_ptr<const Lattice> lattice);
  static MassVector point(std::shared_ptr<const Lattice> lattice, std::size_t index);

  double total() const noexcept;
  double operator[](std::size_t i) const { return values.at(i); }
  // Non-negative, aligned, sums to 1, and m(empty) = 0 unless allowed.
  // Throws InvalidArgument.
  void validate() const;
};

struct BeliefVector {
  std::shared_ptr<const Lattice> lattice;
  std::vector<double> values;

  double operator[](std::size_t i) const { return values.at(i); }
};

// Bel(A) = sum of m(B) over B subset of A, evaluated by direct summation.
BeliefVector belief_by_summation(const MassVector& m);

// Pl(A) = sum of m(B) over B meeting A.
double plausibility(const MassVector& m, ElementMask a);

bool same_lattice(const Lattice& a, const Lattice& b);

}  // namespace dsmt
