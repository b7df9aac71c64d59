#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dsmt/belief_matrix.hpp"
#include "dsmt/error.hpp"
#include "test_support.hpp"

using namespace dsmt;
using dsmt::testing::masses_from;
using dsmt::testing::random_masses;
using dsmt::testing::shared;

namespace {

template <typename M>
std::vector<std::vector<long long>> rows_of(const M& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

// Oracle for Bel: compare D_n rows part by part.
std::vector<double> belief_oracle(const MassVector& m) {
  const Lattice& l = *m.lattice;
  std::vector<double> bel(l.size(), 0.0);
  for (std::size_t a = 0; a < l.size(); ++a) {
    const auto ra = l.dn_row(a);
    for (std::size_t b = 0; b < l.size(); ++b) {
      const auto rb = l.dn_row(b);
      bool inside = true;
      for (std::size_t p = 0; p < ra.size(); ++p) inside = inside && (rb[p] <= ra[p]);
      if (inside) bel[a] += m.values[b];
    }
  }
  return bel;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("BM_2 in strength order and its inverse") {
  const BeliefMatrix bm = build_bm(shared(generate_isotone(2)), OrderKind::strength);
  CHECK(rows_of(bm.entries()) == std::vector<std::vector<long long>>{
                                     {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 1, 1}});
  CHECK(rows_of(invert_bm(bm)) == std::vector<std::vector<long long>>{{1, 0, 0, 0, 0},
                                                                      {-1, 1, 0, 0, 0},
                                                                      {0, -1, 1, 0, 0},
                                                                      {0, -1, 0, 1, 0},
                                                                      {0, 1, -1, -1, 1}});
  CHECK(bm.is_unit_lower_triangular());
}

TEST_CASE("n = 1 matrices") {
  const BeliefMatrix bm = build_bm(shared(generate_isotone(1)), OrderKind::strength);
  CHECK(rows_of(bm.entries()) == std::vector<std::vector<long long>>{{1, 0}, {1, 1}});
  CHECK(rows_of(bm.inverse()) == std::vector<std::vector<long long>>{{1, 0}, {-1, 1}});
  CHECK(rows_of(bm_recursive_dst(1)) == std::vector<std::vector<long long>>{{1, 0}, {1, 1}});
}

TEST_CASE("bibe BM_3 and its inverse") {
  const BeliefMatrix bm = build_bm(shared(generate_powerset_bibe(3)), OrderKind::iso);
  const std::vector<std::vector<long long>> expected = {
      {1, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0, 1, 0}, {1, 1, 1, 1, 1, 1, 1, 1}};
  CHECK(rows_of(bm.entries()) == expected);
  CHECK(rows_of(bm_recursive_dst(3)) == expected);
  const auto inv = rows_of(invert_bm(bm));
  CHECK(inv[7] == std::vector<long long>{-1, 1, 1, -1, 1, -1, -1, 1});
  CHECK(inv[3] == std::vector<long long>{1, -1, -1, 1, 0, 0, 0, 0});
}

TEST_CASE("recursive powerset matrix equals the subset-built one") {
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const BeliefMatrix bm = build_bm(shared(generate_powerset_bibe(n)), OrderKind::iso);
    CHECK(bm_recursive_dst(n) == bm.entries());
  }
  CHECK(bm_recursive_dst(5).rows() == 32);
  CHECK_THROWS_AS(bm_recursive_dst(11), InvalidArgument);
}

TEST_CASE("powerset matrices are symmetric about the antidiagonal") {
  for (int n = 0; n <= 8; ++n) {
    const BinaryMatrix bm = bm_recursive_dst(n);
    const Eigen::Index last = bm.rows() - 1;
    bool symmetric = true;
    for (Eigen::Index r = 0; r <= last; ++r) {
      for (Eigen::Index c = 0; c <= last; ++c) symmetric = symmetric && bm(r, c) == bm(last - c, last - r);
    }
    CHECK(symmetric);
  }
}

TEST_CASE("inclusion-respecting orders give unimodular triangular matrices") {
  for (int n = 0; n <= 4; ++n) {
    auto lattice = shared(generate_isotone(n));
    for (OrderKind kind : {OrderKind::strength, OrderKind::cardinality}) {
      const BeliefMatrix bm = build_bm(lattice, kind);
      REQUIRE(bm.is_unit_lower_triangular());
      const IntMatrix& inv = bm.inverse();
      const IntMatrix product = bm.entries().cast<std::int64_t>() * inv;
      CHECK(product == IntMatrix::Identity(product.rows(), product.cols()));
      CHECK(inv.minCoeff() >= -1);
      CHECK(inv.maxCoeff() <= 1);
    }
  }
  for (int n = 0; n <= 8; ++n) {
    const BeliefMatrix bm = build_bm(shared(generate_powerset_bibe(n)), OrderKind::iso);
    const IntMatrix inv = invert_bm(bm);
    CHECK(inv.minCoeff() >= -1);
    CHECK(inv.maxCoeff() <= 1);
  }
}

TEST_CASE("non-triangular orders are still invertible") {
  auto lattice = shared(generate_isotone(3));
  CHECK(build_bm(lattice, OrderKind::iso).is_unit_lower_triangular());
  std::vector<std::size_t> reversed(lattice->size());
  for (std::size_t i = 0; i < reversed.size(); ++i) reversed[i] = reversed.size() - 1 - i;
  const BeliefMatrix bm(lattice, reversed);
  CHECK_FALSE(bm.is_unit_lower_triangular());
  CHECK_THROWS_AS(invert_bm(bm), NotTriangular);
  const IntMatrix product = bm.entries().cast<std::int64_t>() * bm.inverse();
  CHECK(product == IntMatrix::Identity(product.rows(), product.cols()));
}

TEST_CASE("invert rejects a non-triangular matrix") {
  BinaryMatrix m(2, 2);
  m << 1, 1, 0, 1;
  CHECK_THROWS_AS(invert_unit_lower_triangular(m), NotTriangular);
  m << 0, 0, 1, 1;
  CHECK_THROWS_AS(invert_unit_lower_triangular(m), NotTriangular);
  m << 1, 0, 1, 1;
  CHECK(rows_of(invert_unit_lower_triangular(m)) == std::vector<std::vector<long long>>{{1, 0}, {-1, 1}});
}

TEST_CASE("Bel from m on the n = 2 example") {
  auto lattice = shared(generate_isotone(2));
  const BeliefMatrix bm = build_bm(lattice, OrderKind::strength);
  const MassVector m = masses_from(lattice, {{"1&2", 0.2}, {"1", 0.3}, {"2", 0.1}, {"1|2", 0.4}});
  const BeliefVector bel = bel_from_m(bm, m);
  CHECK(max_abs_diff(bel.values, belief_oracle(m)) < 1e-12);
  std::vector<double> by_rank;
  for (auto i : bm.order()) by_rank.push_back(bel.values[i]);
  const std::vector<double> expected = {0.0, 0.2, 0.5, 0.3, 1.0};
  CHECK(max_abs_diff(by_rank, expected) < 1e-12);
}

TEST_CASE("point mass on the whole frame") {
  auto lattice = shared(generate_isotone(3));
  const BeliefMatrix bm = build_bm(lattice, OrderKind::strength);
  const std::size_t top = lattice->require_index(lattice->total());
  const BeliefVector bel = bel_from_m(bm, MassVector::point(lattice, top));
  for (std::size_t i = 0; i < lattice->size(); ++i) CHECK(bel.values[i] == (i == top ? 1.0 : 0.0));
}

TEST_CASE("round trip and agreement with direct summation") {
  std::mt19937_64 rng(2024);
  std::vector<std::shared_ptr<const Lattice>> lattices = {shared(generate_isotone(2)), shared(generate_isotone(4)),
                                                          shared(generate_powerset_bibe(4))};
  for (const auto& lattice : lattices) {
    for (OrderKind kind : {OrderKind::strength, OrderKind::cardinality, OrderKind::iso}) {
      const BeliefMatrix bm = build_bm(lattice, kind);
      for (int trial = 0; trial < 25; ++trial) {
        const MassVector m = random_masses(lattice, rng);
        const BeliefVector bel = bel_from_m(bm, m);
        CHECK(max_abs_diff(bel.values, belief_oracle(m)) < 1e-12);
        CHECK(max_abs_diff(bel.values, belief_by_summation(m).values) < 1e-12);
        CHECK(max_abs_diff(m_from_bel(bm, bel).values, m.values) < 1e-12);
        CHECK(bel.values[0] == 0.0);
        CHECK(std::abs(bel.values[lattice->require_index(lattice->total())] - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("plausibility") {
  auto dst = shared(generate_powerset_bibe(2));
  const MassVector m = masses_from(dst, {{"1", 0.3}, {"2", 0.2}, {"1|2", 0.5}});
  const double pl = plausibility(m, dst->generator(1));
  CHECK(std::abs(pl - 0.8) < 1e-12);
  const BeliefVector bel = belief_by_summation(m);
  CHECK(std::abs(pl - (1.0 - bel.values[dst->require_index(dst->generator(2))])) < 1e-12);
  CHECK(plausibility(m, dst->empty()) == 0.0);

  std::mt19937_64 rng(99);
  auto free3 = shared(generate_isotone(3));
  for (int trial = 0; trial < 50; ++trial) {
    const MassVector g = random_masses(free3, rng);
    CHECK(std::abs(plausibility(g, free3->total()) - 1.0) < 1e-12);
    CHECK(plausibility(g, free3->empty()) == 0.0);
    const BeliefVector b = belief_by_summation(g);
    for (std::size_t i = 0; i < free3->size(); ++i) CHECK(b.values[i] <= plausibility(g, free3->element(i)) + 1e-12);
  }
}

TEST_CASE("matrix errors") {
  auto two = shared(generate_isotone(2));
  auto three = shared(generate_isotone(3));
  const BeliefMatrix bm = build_bm(two, OrderKind::strength);
  CHECK_THROWS_AS(bel_from_m(bm, MassVector::zeros(three)), InvalidArgument);
  CHECK_THROWS_AS(m_from_bel(bm, BeliefVector{two, {0.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(BeliefMatrix(two, {0, 1, 1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(BeliefMatrix(two, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(build_bm(shared(generate_isotone(5)), OrderKind::strength), InvalidArgument);
}

TEST_CASE("opt-in n = 5 matrix supports products") {
  auto lattice = shared(generate_isotone(5));
  const BeliefMatrix bm = build_bm(lattice, OrderKind::strength, true);
  CHECK(bm.size() == 7580);
  std::mt19937_64 rng(5);
  const MassVector m = random_masses(lattice, rng, 20);
  const BeliefVector bel = bel_from_m(bm, m);
  CHECK(max_abs_diff(bel.values, belief_by_summation(m).values) < 1e-12);
}
