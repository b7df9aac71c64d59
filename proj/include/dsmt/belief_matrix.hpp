#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "dsmt/lattice.hpp"
#include "dsmt/mass.hpp"
#include "dsmt/ordering.hpp"

namespace dsmt {

using BinaryMatrix = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dense matrices stop here unless the caller opts in (n = 4 free hyper-powerset
// and n = 10 powerset).
inline constexpr std::size_t kMaxDenseHyperSize = 167;
inline constexpr std::size_t kMaxDensePowersetSize = 1024;

// 0/1 inclusion matrix over an ordered lattice: entry (r, c) is 1 iff the
// element at rank c is a subset of the element at rank r, so Bel = BM * m.
class BeliefMatrix {
 public:
  // Throws InvalidArgument if `order` is not a permutation of the lattice
  // indices or the lattice exceeds the dense caps without allow_large.
  BeliefMatrix(std::shared_ptr<const Lattice> lattice, std::vector<std::size_t> order,
               bool allow_large = false);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const noexcept { return lattice_; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  const std::vector<std::size_t>& rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return order_.size(); }
  const BinaryMatrix& entries() const noexcept { return entries_; }

  bool is_unit_lower_triangular() const;

  // Exact inverse in this matrix's order. Non-triangular orders are
  // inverted through the strength order and permuted back. Computed once.
  const IntMatrix& inverse() const;

 private:
  struct InverseCache;

  std::shared_ptr<const Lattice> lattice_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
  BinaryMatrix entries_;
  bool allow_large_;
  std::shared_ptr<InverseCache> inverse_cache_;
};

BeliefMatrix build_bm(std::shared_ptr<const Lattice> lattice, OrderKind kind,
                      bool allow_large = false);

// BM_{i+1} = [[BM_i, 0], [BM_i, BM_i]] from BM_0 = [1]; powerset in bibe order.
BinaryMatrix bm_recursive_dst(int n);

// Forward substitution on a unit lower triangular 0/1 matrix. Throws
// NotTriangular instead of pivoting.
IntMatrix invert_unit_lower_triangular(const BinaryMatrix& bm);
IntMatrix invert_bm(const BeliefMatrix& bm);

// Matrix route for Bel = BM m and m = BM^-1 Bel; vectors stay in lattice index
// order. Throws InvalidArgument on misaligned vectors.
BeliefVector bel_from_m(const BeliefMatrix& bm, const MassVector& m);
MassVector m_from_bel(const BeliefMatrix& bm, const BeliefVector& bel);

}  // namespace dsmt
