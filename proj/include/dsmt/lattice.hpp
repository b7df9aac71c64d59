#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/element_mask.hpp"
#include "dsmt/frame_model.hpp"
#include "dsmt/venn.hpp"

namespace dsmt {

// Dedekind-derived sizes |D^Theta| of the free hyper-powerset, n = 0..6.
inline constexpr std::uint64_t kHyperPowersetSizes[] = {1, 2, 5, 19, 167, 7580, 7828353};

// Largest frame generated without the explicit opt-in.
inline constexpr int kDefaultMaxIsotoneFrameSize = 5;
inline constexpr int kMaxClosureFrameSize = 5;

enum class LatticeSource { isotone, closure, powerset, constrained };

// Indexed, deduplicated element list of 2^Theta or D^Theta for one model.
// Index 0 is always the empty set. Elements are stored as raw part bitsets over
// the model's encoding basis; index order is the generation order.
class Lattice {
 public:
  Lattice(FrameModel model, EncodingBasis basis, std::vector<std::uint64_t> masks,
          LatticeSource source, std::vector<std::uint64_t> origin_masks = {});

  const FrameModel& model() const noexcept { return model_; }
  const EncodingBasis& basis() const noexcept { return basis_; }
  LatticeSource source() const noexcept { return source_; }
  int n() const noexcept { return model_.n(); }
  int width() const noexcept { return static_cast<int>(basis_.dimension()); }
  std::size_t size() const noexcept { return masks_.size(); }

  ElementMask element(std::size_t i) const;
  std::span<const std::uint64_t> masks() const noexcept { return masks_; }

  std::optional<std::size_t> index_of(ElementMask e) const;
  // Throws InvalidArgument if e is not an element of this lattice.
  std::size_t require_index(ElementMask e) const;

  // theta_k for 1 <= k <= n, as a mask over this lattice's basis.
  ElementMask generator(int k) const;
  ElementMask total() const noexcept { return ElementMask::total(width()); }
  ElementMask empty() const noexcept { return ElementMask::empty(width()); }

  // Row i of the generating matrix D_n: part membership of element i.
  std::vector<std::uint8_t> dn_row(std::size_t i) const;

  // Sorted part codes, e.g. "{13,23,123}"; the empty set prints as "{}".
  std::string label(std::size_t i) const;
  // Union/intersection expression for small frames (hand-checked table for
  // free n <= 3 and constrained models derived from it, plain unions for
  // powersets); falls back to label() otherwise.
  std::string pretty_label(std::size_t i) const;

  // Same set of masks over the same basis, ignoring order.
  bool same_elements(const Lattice& other) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.model_ == b.model_ && a.basis_ == b.basis_ && a.masks_ == b.masks_;
  }

 private:
  struct IndexCache;
  const IndexCache& index_cache() const;

  FrameModel model_;
  EncodingBasis basis_;
  std::vector<std::uint64_t> masks_;
  LatticeSource source_;
  // For constrained lattices: the free-model mask each element was kept from.
  std::vector<std::uint64_t> origin_masks_;
  std::shared_ptr<IndexCache> cache_;
};

// Free hyper-powerset through the isotone Boolean function recursion
// D_n^c -> D_{n+1}^c, starting from D_0^c = [0 1]'. Index order is r^iso.
// n = 6 requires allow_large.
Lattice generate_isotone(int n, bool allow_large = false);

// Brute-force fixpoint of {empty, theta_1..theta_n} under AND/OR over the
// model's basis. Independent of the isotone recursion.
Lattice generate_closure_oracle(const FrameModel& model);

// Projects a free lattice onto the parts that survive `model`, deduplicating
// collapsed elements (lowest free index wins). Throws InvalidArgument if every
// part is suppressed or the frame sizes differ.
Lattice apply_constraints(const Lattice& free, const FrameModel& model);

// 2^Theta in bibe order: element i is the union of theta_{j+1} over the set
// bits j of i.
Lattice generate_powerset_bibe(int n);

// generate_isotone followed by apply_constraints, or the powerset when the
// model is exclusive.
Lattice generate_lattice(const FrameModel& model, bool allow_large = false);

// Parses "(1|2)&3"-style expressions over generator digits. Accepts & or ^ or
// the intersection sign for meet, | or v or the union sign for join, and "0" or
// the empty-set sign for the bottom element.
ElementMask parse_expression(std::string_view text, const Lattice& lattice);

}  // namespace dsmt
