#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "dsmt/frame_model.hpp"

namespace dsmt {

inline constexpr int kMaxHyperFrameSize = 6;
inline constexpr int kMaxPowersetFrameSize = 10;

using Rational = boost::rational<std::int64_t>;

// One region of the Venn diagram, named by the generators that contain it
// (Smarandache codification): {1,2} is the part inside theta_1 and theta_2 only.
struct PartCode {
  GeneratorSet indices = 0;
  std::size_t position = 0;

  int length() const noexcept;
  std::string code() const;

  friend bool operator==(const PartCode&, const PartCode&) = default;
};

// 1 / length, exact.
Rational part_weight(const PartCode& part);

// The ordered part basis u_n of a model together with the weights w_n.
//
// Free-model order is recursive: the basis for n-1, then <n>, then every
// earlier part with n appended. For n = 3 that is
// <1> <2> <12> <3> <13> <23> <123>, i.e. the free part at position p has the
// index set p + 1. Constrained models keep the surviving parts in the same
// relative order and renumber positions densely.
class EncodingBasis {
 public:
  EncodingBasis() = default;

  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return parts_.size(); }
  const std::vector<PartCode>& parts() const noexcept { return parts_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const PartCode& part(std::size_t position) const { return parts_.at(position); }

  std::optional<std::size_t> find(GeneratorSet indices) const noexcept;
  std::optional<std::size_t> find_code(std::string_view code) const noexcept;

  friend bool operator==(const EncodingBasis& a, const EncodingBasis& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }

 private:
  friend EncodingBasis build_basis(int n, const FrameModel& model);

  int n_ = 0;
  std::vector<PartCode> parts_;
  std::vector<Rational> weights_;
};

// Throws InvalidArgument if n is out of range (0..6, or 0..10 for the Shafer
// model whose basis is just the n singletons) or if the model belongs to a
// different frame size.
EncodingBasis build_basis(int n, const FrameModel& model);

}  // namespace dsmt
