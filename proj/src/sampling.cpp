#include "mwp/sampling.hpp"

#include <cmath>
#include <random>

namespace mwp {

std::vector<SamplePoint> fundamental_domain_samples(int count, unsigned seed, double max_imag) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), unit(0.0, 1.0), coord(0.15, 0.85);
  std::vector<SamplePoint> out;
  while (static_cast<int>(out.size()) < count) {
    const double x = re(gen);
    const double y = std::sqrt(1 - x * x) + unit(gen) * (max_imag - std::sqrt(1 - x * x));
    const Complex tau(x, y);
    const double a = coord(gen), b = coord(gen);
    out.push_back({ModularPoint(tau), a + b * tau});
  }
  return out;
}

std::vector<Complex> small_points(int count, double radius, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> r(0.0, 1.0), angle(0.0, 2 * kPi);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex x = std::polar(radius * std::sqrt(r(gen)), angle(gen));
    bool ok = std::abs(x) > radius / 8;
    for (const Complex& y : out) ok = ok && std::abs(x - y) >= radius / 4;
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace mwp
