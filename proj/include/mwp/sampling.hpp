#pragma once

#include <vector>

#include "mwp/config.hpp"

namespace mwp {

struct SamplePoint {
  ModularPoint tau;
  Complex z;
};

// tau uniform in the standard fundamental domain cut at Im tau <= max_imag;
// z = a + b tau with a, b uniform in [0.15, 0.85], so z stays off the lattice.
std::vector<SamplePoint> fundamental_domain_samples(int count, unsigned seed, double max_imag = 1.6);

// Distinct points in the disc |x| <= radius with pairwise distance >= radius / 4.
std::vector<Complex> small_points(int count, double radius, unsigned seed);

}  // namespace mwp
