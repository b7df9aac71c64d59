#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace dsmt {

inline constexpr int kMaxMaskWidth = 64;

// A lattice element as the set of Venn parts it covers. Bit i is the part at
// position i of the encoding basis; `width` is the basis dimension and acts as
// the basis tag checked by the binary operations.
struct ElementMask {
  std::uint64_t bits = 0;
  std::uint8_t width = 0;

  static ElementMask empty(int width) noexcept { return {0, static_cast<std::uint8_t>(width)}; }
  static ElementMask total(int width) noexcept;

  bool is_empty() const noexcept { return bits == 0; }
  int popcount() const noexcept { return std::popcount(bits); }
  bool test(int part) const noexcept { return (bits >> part) & 1U; }

  friend bool operator==(const ElementMask&, const ElementMask&) = default;
};

// These throw InvalidArgument when the operands come from different bases.
ElementMask intersect(ElementMask a, ElementMask b);
ElementMask unite(ElementMask a, ElementMask b);
bool is_subset(ElementMask a, ElementMask b);
bool is_strict_subset(ElementMask a, ElementMask b);
bool intersects(ElementMask a, ElementMask b);

inline ElementMask operator&(ElementMask a, ElementMask b) { return intersect(a, b); }
inline ElementMask operator|(ElementMask a, ElementMask b) { return unite(a, b); }

}  // namespace dsmt

template <>
struct std::hash<dsmt::ElementMask> {
  std::size_t operator()(const dsmt::ElementMask& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits) ^ (std::size_t{m.width} << 58);
  }
};
