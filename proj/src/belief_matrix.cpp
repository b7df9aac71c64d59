#include "dsmt/belief_matrix.hpp"

#include <mutex>

#include "dsmt/error.hpp"

namespace dsmt {

struct BeliefMatrix::InverseCache {
  std::once_flag once;
  IntMatrix value;
};

namespace {

std::size_t dense_cap(const Lattice& lattice) {
  return lattice.model().kind() == ModelKind::shafer ? kMaxDensePowersetSize : kMaxDenseHyperSize;
}

}  // namespace

BeliefMatrix::BeliefMatrix(std::shared_ptr<const Lattice> lattice, std::vector<std::size_t> order,
                           bool allow_large)
    : lattice_(std::move(lattice)),
      order_(std::move(order)),
      allow_large_(allow_large),
      inverse_cache_(std::make_shared<InverseCache>()) {
  if (!lattice_) throw InvalidArgument("belief matrix needs a lattice");
  const std::size_t size = lattice_->size();
  if (!allow_large && size > dense_cap(*lattice_)) {
    throw InvalidArgument("lattice of " + std::to_string(size) +
                          " elements exceeds the dense matrix cap without opt-in");
  }
  if (order_.size() != size) throw InvalidArgument("ordering is not a permutation of the lattice");
  rank_.assign(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    if (order_[r] >= size || rank_[order_[r]] != size) {
      throw InvalidArgument("ordering is not a permutation of the lattice");
    }
    rank_[order_[r]] = r;
  }

  const auto masks = lattice_->masks();
  entries_ = BinaryMatrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t r = 0; r < size; ++r) {
    const std::uint64_t row = masks[order_[r]];
    for (std::size_t c = 0; c < size; ++c) {
      if ((masks[order_[c]] & ~row) == 0) entries_(r, c) = 1;
    }
  }
}

bool BeliefMatrix::is_unit_lower_triangular() const {
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    if (entries_(r, r) != 1) return false;
    for (Eigen::Index c = r + 1; c < entries_.cols(); ++c) {
      if (entries_(r, c) != 0) return false;
    }
  }
  return true;
}

const IntMatrix& BeliefMatrix::inverse() const {
  std::call_once(inverse_cache_->once, [this] {
    if (is_unit_lower_triangular()) {
      inverse_cache_->value = invert_unit_lower_triangular(entries_);
      return;
    }
    // Invert in strength order, then map ranks back to this order.
    const BeliefMatrix strength_bm(lattice_, total_order(*lattice_, OrderKind::strength), allow_large_);
    const IntMatrix& s_inv = strength_bm.inverse();
    const auto n = static_cast<Eigen::Index>(size());
    IntMatrix inv(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto sr = static_cast<Eigen::Index>(strength_bm.rank()[order_[r]]);
      for (Eigen::Index c = 0; c < n; ++c) {
        inv(r, c) = s_inv(sr, static_cast<Eigen::Index>(strength_bm.rank()[order_[c]]));
      }
    }
    inverse_cache_->value = std::move(inv);
  });
  return inverse_cache_->value;
}

BeliefMatrix build_bm(std::shared_ptr<const Lattice> lattice, OrderKind kind, bool allow_large) {
  if (!lattice) throw InvalidArgument("belief matrix needs a lattice");
  auto order = total_order(*lattice, kind);
  return BeliefMatrix(std::move(lattice), std::move(order), allow_large);
}

BinaryMatrix bm_recursive_dst(int n) {
  if (n < 0 || n > kMaxPowersetFrameSize) {
    throw InvalidArgument("recursive powerset matrix supports n in 0.." +
                          std::to_string(kMaxPowersetFrameSize));
  }
  BinaryMatrix bm = BinaryMatrix::Ones(1, 1);
  for (int i = 0; i < n; ++i) {
    const Eigen::Index k = bm.rows();
    BinaryMatrix next = BinaryMatrix::Zero(2 * k, 2 * k);
    next.topLeftCorner(k, k) = bm;
    next.bottomLeftCorner(k, k) = bm;
    next.bottomRightCorner(k, k) = bm;
    bm = std::move(next);
  }
  return bm;
}

IntMatrix invert_unit_lower_triangular(const BinaryMatrix& bm) {
  if (bm.rows() != bm.cols()) throw NotTriangular("belief matrix is not square");
  const Eigen::Index n = bm.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    if (bm(r, r) != 1) throw NotTriangular("diagonal entry " + std::to_string(r) + " is not 1");
    for (Eigen::Index c = r + 1; c < n; ++c) {
      if (bm(r, c) != 0) {
        throw NotTriangular("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") above the diagonal; the order does not respect inclusion");
      }
    }
  }
  // Row r of BM * X = I gives X_r = e_r - sum over c < r with BM(r, c) = 1 of X_c.
  IntMatrix inv = IntMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    inv(r, r) = 1;
    for (Eigen::Index c = 0; c < r; ++c) {
      if (bm(r, c) != 0) inv.row(r).head(r) -= inv.row(c).head(r);
    }
  }
  return inv;
}

IntMatrix invert_bm(const BeliefMatrix& bm) { return invert_unit_lower_triangular(bm.entries()); }

BeliefVector bel_from_m(const BeliefMatrix& bm, const MassVector& m) {
  if (!m.lattice || !same_lattice(*m.lattice, bm.lattice()) || m.values.size() != bm.size()) {
    throw InvalidArgument("mass vector is not aligned with the belief matrix");
  }
  const auto& order = bm.order();
  const auto& e = bm.entries();
  BeliefVector bel{bm.lattice_ptr(), std::vector<double>(bm.size(), 0.0)};
  for (std::size_t r = 0; r < bm.size(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < bm.size(); ++c) {
      if (e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) != 0) sum += m.values[order[c]];
    }
    bel.values[order[r]] = sum;
  }
  return bel;
}

MassVector m_from_bel(const BeliefMatrix& bm, const BeliefVector& bel) {
  if (!bel.lattice || !same_lattice(*bel.lattice, bm.lattice()) || bel.values.size() != bm.size()) {
    throw InvalidArgument("belief vector is not aligned with the belief matrix");
  }
  const auto& order = bm.order();
  const IntMatrix& inv = bm.inverse();
  MassVector m{bm.lattice_ptr(), std::vector<double>(bm.size(), 0.0)};
  for (std::size_t r = 0; r < bm.size(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < bm.size(); ++c) {
      const auto coef = inv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (coef != 0) sum += static_cast<double>(coef) * bel.values[order[c]];
    }
    m.values[order[r]] = sum;
  }
  return m;
}

}  // namespace dsmt
