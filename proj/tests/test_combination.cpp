#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "dsmt/combination.hpp"
#include "dsmt/error.hpp"
#include "test_support.hpp"

using namespace dsmt;
using dsmt::testing::at;
using dsmt::testing::masses_from;
using dsmt::testing::random_masses;
using dsmt::testing::shared;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Oracle: enumerate all pairs by mask, with no index bookkeeping.
std::map<std::uint64_t, double> product_oracle(const MassVector& m1, const MassVector& m2) {
  std::map<std::uint64_t, double> out;
  const Lattice& l = *m1.lattice;
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      out[l.element(x).bits & l.element(y).bits] += m1.values[x] * m2.values[y];
    }
  }
  return out;
}

double oracle_dempster(const MassVector& m1, const MassVector& m2, std::size_t i) {
  const auto prod = product_oracle(m1, m2);
  const double k = prod.count(0) ? prod.at(0) : 0.0;
  const std::uint64_t bits = m1.lattice->element(i).bits;
  if (bits == 0) return 0.0;
  return (prod.count(bits) ? prod.at(bits) : 0.0) / (1.0 - k);
}

MassVector random_bba_with_conflict_below(const std::shared_ptr<const Lattice>& l, std::mt19937_64& rng,
                                          const MassVector& other) {
  for (;;) {
    MassVector m = random_masses(l, rng);
    if (conjunctive_consensus(m, other).conflict.k12 < 0.99) return m;
  }
}

}  // namespace

TEST_CASE("quarter-conflict example across the classical rules") {
  auto dst = shared(generate_powerset_bibe(2));
  const MassVector m1 = masses_from(dst, {{"1", 0.5}, {"1|2", 0.5}});
  const MassVector m2 = masses_from(dst, {{"2", 0.5}, {"1|2", 0.5}});

  const Consensus c = conjunctive_consensus(m1, m2);
  CHECK(c.conflict.k12 == 0.25);
  REQUIRE(c.conflict.pairs.size() == 1);
  CHECK(c.conflict.pairs[0].mass == 0.25);
  CHECK(c.masses.values[0] == 0.25);

  const MassVector d = dempster_combine(m1, m2);
  CHECK(d.values[0] == 0.0);
  for (const char* e : {"1", "2", "1|2"}) CHECK(std::abs(at(d, e) - 1.0 / 3.0) < 1e-15);

  const MassVector y = yager_combine(m1, m2);
  CHECK(at(y, "1") == 0.25);
  CHECK(at(y, "2") == 0.25);
  CHECK(at(y, "1|2") == 0.5);
  CHECK(y.values[0] == 0.0);

  const MassVector s = smets_combine(m1, m2);
  CHECK(s.values[0] == 0.25);
  CHECK(at(s, "1|2") == 0.25);
  CHECK(s.allows_empty_mass);
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("vacuous source is neutral for Dempster") {
  auto dst = shared(generate_powerset_bibe(3));
  std::mt19937_64 rng(1);
  const MassVector vacuous = MassVector::point(dst, dst->require_index(dst->total()));
  for (int trial = 0; trial < 20; ++trial) {
    const MassVector m = random_masses(dst, rng);
    CHECK(max_abs_diff(dempster_combine(m, vacuous).values, m.values) < 1e-15);
  }
}

TEST_CASE("full contradiction raises") {
  auto dst = shared(generate_powerset_bibe(2));
  const MassVector a = masses_from(dst, {{"1", 1.0}});
  const MassVector b = masses_from(dst, {{"2", 1.0}});
  CHECK_THROWS_AS(dempster_combine(a, b), FullContradiction);
  try {
    dempster_combine(a, b);
  } catch (const FullContradiction& e) {
    CHECK(e.conflict() == 1.0);
  }
  CHECK_THROWS_AS(dempster_weights(conjunctive_consensus(a, b)), FullContradiction);
  const MassVector y = yager_combine(a, b);
  CHECK(at(y, "1|2") == 1.0);
}

TEST_CASE("Dempster preset equals Dempster's rule and the pair oracle") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    auto dst = shared(generate_powerset_bibe(n));
    for (int trial = 0; trial < 100; ++trial) {
      const MassVector m1 = random_masses(dst, rng);
      const MassVector m2 = random_bba_with_conflict_below(dst, rng, m1);
      const MassVector direct = dempster_combine(m1, m2);
      const MassVector via = weighted_redistribution(m1, m2, dempster_weights(conjunctive_consensus(m1, m2)));
      CHECK(max_abs_diff(direct.values, via.values) < 1e-12);
      for (std::size_t i = 0; i < dst->size(); ++i) {
        CHECK(std::abs(direct.values[i] - oracle_dempster(m1, m2, i)) < 1e-12);
      }
      CHECK(std::abs(direct.total() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("DSm rule on the free n = 2 example") {
  auto free2 = shared(generate_isotone(2));
  const MassVector m1 = masses_from(free2, {{"1", 0.6}, {"2", 0.4}});
  const MassVector m2 = masses_from(free2, {{"1", 0.3}, {"2", 0.7}});
  const MassVector r = dsm_combine(m1, m2);
  CHECK(std::abs(at(r, "1") - 0.18) < 1e-15);
  CHECK(std::abs(at(r, "2") - 0.28) < 1e-15);
  CHECK(std::abs(at(r, "1&2") - 0.54) < 1e-15);
  CHECK(r.values[0] == 0.0);
  CHECK_NOTHROW(r.validate());

  auto dst = shared(generate_powerset_bibe(2));
  CHECK_THROWS_AS(dempster_combine(masses_from(dst, {{"1", 1.0}}), masses_from(dst, {{"2", 1.0}})),
                  FullContradiction);
  const MassVector sure = dsm_combine(masses_from(free2, {{"1", 1.0}}), masses_from(free2, {{"2", 1.0}}));
  CHECK(at(sure, "1&2") == 1.0);
}

TEST_CASE("DSm rule is commutative, associative and keeps the empty set clear") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    auto free = shared(generate_isotone(n));
    for (int trial = 0; trial < 100; ++trial) {
      const MassVector a = random_masses(free, rng);
      const MassVector b = random_masses(free, rng);
      const MassVector c = random_masses(free, rng);
      CHECK(dsm_combine(a, b).values == dsm_combine(b, a).values);
      const MassVector left = dsm_combine(dsm_combine(a, b), c);
      const MassVector right = dsm_combine(a, dsm_combine(b, c));
      CHECK(max_abs_diff(left.values, right.values) < 1e-12);
      CHECK(left.values[0] == 0.0);
      CHECK(std::abs(left.total() - 1.0) < 1e-12);
      const auto oracle = product_oracle(a, b);
      const MassVector ab = dsm_combine(a, b);
      for (const auto& [bits, mass] : oracle) {
        CHECK(std::abs(ab.values[free->require_index({bits, static_cast<std::uint8_t>(free->width())})] - mass) <
              1e-12);
      }
    }
  }
}

TEST_CASE("rule/model compatibility") {
  auto hybrid = shared(generate_lattice(FrameModel::hybrid(3, {0b011u})));
  auto free = shared(generate_isotone(2));
  auto dst = shared(generate_powerset_bibe(2));
  const MassVector h = MassVector::point(hybrid, hybrid->require_index(hybrid->total()));
  CHECK_THROWS_AS(dsm_combine(h, h), InvalidArgument);
  const MassVector f = MassVector::point(free, 1);
  CHECK_THROWS_AS(dempster_combine(f, f), InvalidArgument);
  CHECK_THROWS_AS(dsm_combine(f, MassVector::point(dst, 1)), InvalidArgument);
}

TEST_CASE("weight schemes are validated") {
  auto dst = shared(generate_powerset_bibe(2));
  const MassVector m = masses_from(dst, {{"1", 1.0}});
  CHECK_THROWS_AS(weighted_redistribution(m, m, WeightScheme{{0.5, 0.5}}), InvalidArgument);
  CHECK_THROWS_AS(weighted_redistribution(m, m, WeightScheme{{0.5, 0.5, 0.5, 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(weighted_redistribution(m, m, WeightScheme{{-0.5, 0.5, 0.5, 0.5}}), InvalidArgument);
  CHECK_NOTHROW(yager_weights(*dst).validate(*dst));
  CHECK_NOTHROW(smets_weights(*dst).validate(*dst));
}

TEST_CASE("rule names") {
  CHECK(parse_rule("dsm") == Rule::dsm);
  CHECK(parse_rule("dempster") == Rule::dempster);
  CHECK(to_string(Rule::smets) == "smets");
  CHECK_THROWS_AS(parse_rule("pcr5"), InvalidArgument);
}

TEST_CASE("combining several sources folds left") {
  auto dst = shared(generate_powerset_bibe(3));
  std::mt19937_64 rng(3);
  std::vector<MassVector> sources;
  for (int i = 0; i < 3; ++i) sources.push_back(random_masses(dst, rng));
  const FusionResult r = combine_sources(Rule::yager, sources);
  const MassVector expected = yager_combine(yager_combine(sources[0], sources[1]), sources[2]);
  CHECK(r.masses.values == expected.values);
  REQUIRE(r.conflicts.size() == 2);
  CHECK(r.conflicts[0] == conjunctive_consensus(sources[0], sources[1]).conflict.k12);

  const WeightScheme scheme = yager_weights(*dst);
  CHECK(combine_sources(Rule::custom, sources, scheme).masses.values == expected.values);
  CHECK_THROWS_AS(combine_sources(Rule::custom, sources), InvalidArgument);
  CHECK_THROWS_AS(combine_sources(Rule::dempster, std::span(sources).first(1)), InvalidArgument);
}
