#include "dsmt/venn.hpp"

#include <bit>

#include "dsmt/error.hpp"

namespace dsmt {

int PartCode::length() const noexcept { return std::popcount(indices); }

std::string PartCode::code() const { return generator_set_code(indices); }

Rational part_weight(const PartCode& part) { return Rational(1, part.length()); }

std::optional<std::size_t> EncodingBasis::find(GeneratorSet indices) const noexcept {
  for (const auto& p : parts_) {
    if (p.indices == indices) return p.position;
  }
  return std::nullopt;
}

std::optional<std::size_t> EncodingBasis::find_code(std::string_view code) const noexcept {
  for (const auto& p : parts_) {
    if (p.code() == code) return p.position;
  }
  return std::nullopt;
}

EncodingBasis build_basis(int n, const FrameModel& model) {
  const bool exclusive = model.kind() == ModelKind::shafer;
  const int cap = exclusive ? kMaxPowersetFrameSize : kMaxHyperFrameSize;
  if (n < 0 || n > cap) {
    throw InvalidArgument("frame size " + std::to_string(n) + " outside supported range 0.." +
                          std::to_string(cap));
  }
  if (model.n() != n) {
    throw InvalidArgument("model is defined for a frame of size " + std::to_string(model.n()) +
                          ", not " + std::to_string(n));
  }

  EncodingBasis basis;
  basis.n_ = n;
  auto add = [&](GeneratorSet indices) {
    PartCode part{indices, basis.parts_.size()};
    basis.weights_.push_back(part_weight(part));
    basis.parts_.push_back(part);
  };

  if (exclusive) {
    // Only the singleton parts survive; they keep their relative order.
    for (int k = 0; k < n; ++k) add(GeneratorSet{1} << k);
    return basis;
  }
  const GeneratorSet count = (GeneratorSet{1} << n) - 1;
  for (GeneratorSet indices = 1; indices <= count; ++indices) {
    if (!model.suppresses(indices)) add(indices);
  }
  return basis;
}

}  // namespace dsmt
