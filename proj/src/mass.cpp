#include "dsmt/mass.hpp"

#include <cmath>
#include <numeric>

#include "dsmt/error.hpp"

namespace dsmt {

MassVector MassVector::zeros(std::shared_ptr<const Lattice> lattice) {
  if (!lattice) throw InvalidArgument("mass vector needs a lattice");
  const std::size_t size = lattice->size();
  return MassVector{std::move(lattice), std::vector<double>(size, 0.0)};
}

MassVector MassVector::point(std::shared_ptr<const Lattice> lattice, std::size_t index) {
  MassVector m = zeros(std::move(lattice));
  m.values.at(index) = 1.0;
  return m;
}

double MassVector::total() const noexcept { return std::accumulate(values.begin(), values.end(), 0.0); }

void MassVector::validate() const {
  if (!lattice) throw InvalidArgument("mass vector has no lattice");
  if (values.size() != lattice->size()) {
    throw InvalidArgument("mass vector has " + std::to_string(values.size()) + " entries, lattice has " +
                          std::to_string(lattice->size()));
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("masses must be finite and non-negative");
  }
  if (!allows_empty_mass && values[0] != 0.0) throw InvalidArgument("m(empty) must be 0");
  if (std::abs(total() - 1.0) > kMassTolerance) {
    throw InvalidArgument("masses sum to " + std::to_string(total()) + ", expected 1");
  }
}

BeliefVector belief_by_summation(const MassVector& m) {
  const Lattice& lattice = *m.lattice;
  const auto masks = lattice.masks();
  BeliefVector bel{m.lattice, std::vector<double>(lattice.size(), 0.0)};
  for (std::size_t a = 0; a < masks.size(); ++a) {
    double sum = 0.0;
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if ((masks[b] & ~masks[a]) == 0) sum += m.values[b];
    }
    bel.values[a] = sum;
  }
  return bel;
}

double plausibility(const MassVector& m, ElementMask a) {
  const Lattice& lattice = *m.lattice;
  if (a.width != lattice.width()) throw InvalidArgument("element is not over the mass vector's basis");
  const auto masks = lattice.masks();
  double sum = 0.0;
  for (std::size_t b = 0; b < masks.size(); ++b) {
    if ((masks[b] & a.bits) != 0) sum += m.values.at(b);
  }
  return sum;
}

bool same_lattice(const Lattice& a, const Lattice& b) { return &a == &b || a == b; }

}  // namespace dsmt
