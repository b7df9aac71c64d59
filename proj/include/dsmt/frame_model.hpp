#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsmt {

// Set of frame elements as a bitset: bit k stands for theta_{k+1}.
using GeneratorSet = std::uint32_t;

enum class ModelKind { free, hybrid, shafer };

// Frame of n hypotheses plus the intersections that the model forces empty.
// Each constraint is the intersection of the generators in one GeneratorSet.
class FrameModel {
 public:
  FrameModel() = default;

  static FrameModel free(int n);
  static FrameModel shafer(int n);
  // Throws InvalidArgument for empty constraints or indices outside 1..n.
  static FrameModel hybrid(int n, std::vector<GeneratorSet> forced_empty);

  int n() const noexcept { return n_; }
  ModelKind kind() const noexcept { return kind_; }
  const std::vector<GeneratorSet>& forced_empty() const noexcept { return forced_empty_; }

  // True when the Venn part with index set `part` lies inside a forced-empty
  // intersection.
  bool suppresses(GeneratorSet part) const noexcept;

  // Every pair of generators is disjoint, so the lattice is the powerset.
  bool exclusive() const noexcept;

  friend bool operator==(const FrameModel&, const FrameModel&) = default;

 private:
  FrameModel(int n, ModelKind kind, std::vector<GeneratorSet> forced_empty)
      : n_(n), kind_(kind), forced_empty_(std::move(forced_empty)) {}

  int n_ = 0;
  ModelKind kind_ = ModelKind::free;
  std::vector<GeneratorSet> forced_empty_;
};

std::string to_string(ModelKind kind);

// "13" for {theta_1, theta_3}. Indices above 9 are written in decimal and
// comma separated, which only happens in powerset frames.
std::string generator_set_code(GeneratorSet set);

}  // namespace dsmt
