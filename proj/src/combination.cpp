#include "dsmt/combination.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <numeric>

#include "dsmt/error.hpp"

namespace dsmt {

namespace {

void require_pair(const MassVector& m1, const MassVector& m2) {
  if (!m1.lattice || !m2.lattice) throw InvalidArgument("mass vector has no lattice");
  if (!same_lattice(*m1.lattice, *m2.lattice)) throw InvalidArgument("sources live on different lattices");
  if (m1.values.size() != m1.lattice->size() || m2.values.size() != m2.lattice->size()) {
    throw InvalidArgument("mass vector is not aligned with its lattice");
  }
}

void require_powerset(const Lattice& lattice) {
  if (!lattice.model().exclusive()) {
    throw InvalidArgument("this rule needs exclusive hypotheses (a powerset lattice); use the DSm rule");
  }
}

std::vector<std::size_t> focal_elements(const MassVector& m) {
  std::vector<std::size_t> focal;
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    if (m.values[i] != 0.0) focal.push_back(i);
  }
  return focal;
}

// Conjunctive product over focal pairs. Terms for each target are summed in
// ascending order so the result does not depend on argument order.
Consensus conjunctive(const MassVector& m1, const MassVector& m2) {
  const Lattice& lattice = *m1.lattice;
  const auto masks = lattice.masks();
  Consensus out{MassVector::zeros(m1.lattice), {}};
  out.masses.allows_empty_mass = true;
  std::vector<std::pair<std::size_t, double>> terms;
  for (std::size_t x : focal_elements(m1)) {
    for (std::size_t y : focal_elements(m2)) {
      const double product = m1.values[x] * m2.values[y];
      const std::uint64_t meet = masks[x] & masks[y];
      const std::size_t c = lattice.require_index({meet, static_cast<std::uint8_t>(lattice.width())});
      terms.emplace_back(c, product);
      if (meet == 0) out.conflict.pairs.push_back({x, y, product});
    }
  }
  std::sort(terms.begin(), terms.end());
  for (const auto& [c, product] : terms) out.masses.values[c] += product;
  out.conflict.k12 = out.masses.values[0];
  return out;
}

}  // namespace

void WeightScheme::validate(const Lattice& lattice) const {
  if (weights.size() != lattice.size()) {
    throw InvalidArgument("weight scheme has " + std::to_string(weights.size()) + " entries, lattice has " +
                          std::to_string(lattice.size()));
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("redistribution weights must be non-negative");
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum - 1.0) > kMassTolerance) {
    throw InvalidArgument("redistribution weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

Rule parse_rule(std::string_view text) {
  if (text == "dsm") return Rule::dsm;
  if (text == "dempster") return Rule::dempster;
  if (text == "yager") return Rule::yager;
  if (text == "smets") return Rule::smets;
  if (text == "custom") return Rule::custom;
  throw InvalidArgument("unknown rule '" + std::string(text) + "' (dsm|dempster|yager|smets|custom)");
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::dsm:
      return "dsm";
    case Rule::dempster:
      return "dempster";
    case Rule::yager:
      return "yager";
    case Rule::smets:
      return "smets";
    case Rule::custom:
      return "custom";
  }
  return "unknown";
}

Consensus conjunctive_consensus(const MassVector& m1, const MassVector& m2) {
  require_pair(m1, m2);
  require_powerset(*m1.lattice);
  return conjunctive(m1, m2);
}

MassVector dempster_combine(const MassVector& m1, const MassVector& m2) {
  Consensus c = conjunctive_consensus(m1, m2);
  const double k12 = c.conflict.k12;
  if (k12 >= 1.0 - kMassTolerance) throw FullContradiction(k12);
  MassVector out = std::move(c.masses);
  out.allows_empty_mass = false;
  out.values[0] = 0.0;
  for (std::size_t i = 1; i < out.values.size(); ++i) out.values[i] /= 1.0 - k12;
  return out;
}

WeightScheme dempster_weights(const Consensus& consensus) {
  const double k12 = consensus.conflict.k12;
  if (k12 >= 1.0 - kMassTolerance) throw FullContradiction(k12);
  WeightScheme scheme{std::vector<double>(consensus.masses.values.size(), 0.0)};
  for (std::size_t i = 1; i < scheme.weights.size(); ++i) {
    scheme.weights[i] = consensus.masses.values[i] / (1.0 - k12);
  }
  return scheme;
}

WeightScheme yager_weights(const Lattice& lattice) {
  WeightScheme scheme{std::vector<double>(lattice.size(), 0.0)};
  scheme.weights[lattice.require_index(lattice.total())] = 1.0;
  return scheme;
}

WeightScheme smets_weights(const Lattice& lattice) {
  WeightScheme scheme{std::vector<double>(lattice.size(), 0.0)};
  scheme.weights[0] = 1.0;
  return scheme;
}

MassVector weighted_redistribution(const MassVector& m1, const MassVector& m2, const WeightScheme& scheme) {
  Consensus c = conjunctive_consensus(m1, m2);
  scheme.validate(*m1.lattice);
  const double k12 = c.conflict.k12;
  MassVector out = std::move(c.masses);
  out.values[0] = scheme.weights[0] * k12;
  for (std::size_t i = 1; i < out.values.size(); ++i) out.values[i] += scheme.weights[i] * k12;
  out.allows_empty_mass = out.values[0] != 0.0;
  return out;
}

MassVector yager_combine(const MassVector& m1, const MassVector& m2) {
  require_pair(m1, m2);
  return weighted_redistribution(m1, m2, yager_weights(*m1.lattice));
}

MassVector smets_combine(const MassVector& m1, const MassVector& m2) {
  require_pair(m1, m2);
  return weighted_redistribution(m1, m2, smets_weights(*m1.lattice));
}

MassVector dsm_combine(const MassVector& m1, const MassVector& m2) {
  require_pair(m1, m2);
  if (m1.lattice->model().kind() != ModelKind::free) {
    throw InvalidArgument("the DSm rule is only defined here for the free model; got a " +
                          to_string(m1.lattice->model().kind()) + " model");
  }
  Consensus c = conjunctive(m1, m2);
  c.masses.allows_empty_mass = false;
  return std::move(c.masses);
}

FusionResult combine_sources(Rule rule, std::span<const MassVector> sources,
                             const std::optional<WeightScheme>& scheme) {
  if (sources.size() < 2) throw InvalidArgument("combination needs at least two sources");
  if (rule == Rule::custom && !scheme) throw InvalidArgument("custom rule needs a weight scheme");

  FusionResult result{sources[0], {}};
  for (std::size_t i = 1; i < sources.size(); ++i) {
    const MassVector& next = sources[i];
    require_pair(result.masses, next);
    if (rule == Rule::dsm) {
      result.masses = dsm_combine(result.masses, next);
      result.conflicts.push_back(result.masses.values[0]);
      continue;
    }
    const Consensus c = conjunctive_consensus(result.masses, next);
    result.conflicts.push_back(c.conflict.k12);
    switch (rule) {
      case Rule::dempster:
        result.masses = dempster_combine(result.masses, next);
        break;
      case Rule::yager:
        result.masses = yager_combine(result.masses, next);
        break;
      case Rule::smets:
        result.masses = smets_combine(result.masses, next);
        break;
      case Rule::custom:
        result.masses = weighted_redistribution(result.masses, next, *scheme);
        break;
      case Rule::dsm:
        break;
    }
  }
  return result;
}

}  // namespace dsmt
