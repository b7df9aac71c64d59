#include "dsmt/frame_model.hpp"

#include <algorithm>
#include <bit>

#include "dsmt/error.hpp"

namespace dsmt {

FrameModel FrameModel::free(int n) {
  if (n < 0) throw InvalidArgument("frame size must be non-negative");
  return FrameModel(n, ModelKind::free, {});
}

FrameModel FrameModel::shafer(int n) {
  if (n < 0) throw InvalidArgument("frame size must be non-negative");
  std::vector<GeneratorSet> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back((GeneratorSet{1} << i) | (GeneratorSet{1} << j));
  }
  return FrameModel(n, ModelKind::shafer, std::move(pairs));
}

FrameModel FrameModel::hybrid(int n, std::vector<GeneratorSet> forced_empty) {
  if (n < 0 || n > 31) throw InvalidArgument("frame size out of range");
  const GeneratorSet frame = (GeneratorSet{1} << n) - 1;
  for (GeneratorSet c : forced_empty) {
    if (c == 0) throw InvalidArgument("empty constraint");
    if ((c & ~frame) != 0) {
      throw InvalidArgument("constraint " + generator_set_code(c) +
                            " references an element outside a frame of size " + std::to_string(n));
    }
  }
  std::sort(forced_empty.begin(), forced_empty.end());
  forced_empty.erase(std::unique(forced_empty.begin(), forced_empty.end()), forced_empty.end());
  if (forced_empty.empty()) return free(n);
  return FrameModel(n, ModelKind::hybrid, std::move(forced_empty));
}

bool FrameModel::suppresses(GeneratorSet part) const noexcept {
  return std::any_of(forced_empty_.begin(), forced_empty_.end(),
                     [part](GeneratorSet c) { return (c & part) == c; });
}

bool FrameModel::exclusive() const noexcept {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!suppresses((GeneratorSet{1} << i) | (GeneratorSet{1} << j))) return false;
    }
  }
  return true;
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::free:
      return "free";
    case ModelKind::hybrid:
      return "hybrid";
    case ModelKind::shafer:
      return "shafer";
  }
  return "unknown";
}

std::string generator_set_code(GeneratorSet set) {
  const bool wide = std::bit_width(set) > 9;
  std::string out;
  for (int k = 0; set >> k; ++k) {
    if (((set >> k) & 1U) == 0) continue;
    if (wide && !out.empty()) out += ',';
    out += std::to_string(k + 1);
  }
  return out;
}

}  // namespace dsmt
