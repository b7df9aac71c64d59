#include "dsmt/element_mask.hpp"

#include <string>

#include "dsmt/error.hpp"

namespace dsmt {

namespace {

void require_same_basis(ElementMask a, ElementMask b) {
  if (a.width != b.width) {
    throw InvalidArgument("element masks from different bases (width " + std::to_string(a.width) +
                          " vs " + std::to_string(b.width) + ")");
  }
}

}  // namespace

ElementMask ElementMask::total(int width) noexcept {
  const std::uint64_t bits = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  return {bits, static_cast<std::uint8_t>(width)};
}

ElementMask intersect(ElementMask a, ElementMask b) {
  require_same_basis(a, b);
  return {a.bits & b.bits, a.width};
}

ElementMask unite(ElementMask a, ElementMask b) {
  require_same_basis(a, b);
  return {a.bits | b.bits, a.width};
}

bool is_subset(ElementMask a, ElementMask b) {
  require_same_basis(a, b);
  return (a.bits & ~b.bits) == 0;
}

bool is_strict_subset(ElementMask a, ElementMask b) { return is_subset(a, b) && a.bits != b.bits; }

bool intersects(ElementMask a, ElementMask b) {
  require_same_basis(a, b);
  return (a.bits & b.bits) != 0;
}

}  // namespace dsmt
