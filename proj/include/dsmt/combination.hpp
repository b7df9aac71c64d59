#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/mass.hpp"

namespace dsmt {

struct ConflictContribution {
  std::size_t first = 0;   // focal element index in the first source
  std::size_t second = 0;  // focal element index in the second source
  double mass = 0.0;
};

struct ConflictReport {
  double k12 = 0.0;
  std::vector<ConflictContribution> pairs;
};

struct Consensus {
  MassVector masses;  // includes the empty-set slot
  ConflictReport conflict;
};

// Redistribution coefficients w(A), indexed like the lattice, empty set
// included.
struct WeightScheme {
  std::vector<double> weights;

  // Non-negative, sums to 1, aligned with `lattice`. Throws InvalidArgument.
  void validate(const Lattice& lattice) const;
};

enum class Rule { dsm, dempster, yager, smets, custom };

Rule parse_rule(std::string_view text);
std::string to_string(Rule rule);

// m(C) = sum of m1(X) m2(Y) over X AND Y = C, empty set included. Both sources
// must live on the same powerset lattice.
Consensus conjunctive_consensus(const MassVector& m1, const MassVector& m2);

// Throws FullContradiction when k12 reaches 1.
MassVector dempster_combine(const MassVector& m1, const MassVector& m2);

// m'(A) = m(A) + w(A) k12 for A non-empty, m'(empty) = w(empty) k12.
MassVector weighted_redistribution(const MassVector& m1, const MassVector& m2,
                                   const WeightScheme& scheme);

// Presets built from the consensus of the pair being combined.
WeightScheme dempster_weights(const Consensus& consensus);
WeightScheme yager_weights(const Lattice& lattice);
WeightScheme smets_weights(const Lattice& lattice);

MassVector yager_combine(const MassVector& m1, const MassVector& m2);
MassVector smets_combine(const MassVector& m1, const MassVector& m2);

// Conjunctive rule over the free hyper-powerset; never normalizes and never
// fails. Constrained models are rejected.
MassVector dsm_combine(const MassVector& m1, const MassVector& m2);

struct FusionResult {
  MassVector masses;
  std::vector<double> conflicts;  // k12 of each binary step, left to right
};

// Left fold of the binary rule over the sources. `scheme` is required for
// Rule::custom and ignored otherwise.
FusionResult combine_sources(Rule rule, std::span<const MassVector> sources,
                             const std::optional<WeightScheme>& scheme = std::nullopt);

}  // namespace dsmt
