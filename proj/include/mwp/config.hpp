#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "mwp/rational.hpp"

namespace mwp {

// Truncation and accuracy settings for lattice evaluations.  M bounds the
// tau-direction (|m| < M), N the integer direction (|n| < N); inner
// n-limits are always taken before the outer m-limit.
struct EvalConfig {
  int M = 80;
  int N = 800;
  int q_order = 64;
  double tolerance = 1e-8;
  int precision = 15;

  void validate() const {
    if (M < 1 || N < M) throw std::invalid_argument("EvalConfig requires N >= M >= 1");
    if (!(tolerance > 0)) throw std::invalid_argument("EvalConfig tolerance must be positive");
    if (q_order < 1) throw std::invalid_argument("EvalConfig q_order must be positive");
    if (precision < 15) throw std::invalid_argument("EvalConfig precision must be >= 15 digits");
  }
};

// A point tau of the upper half-plane.
class ModularPoint {
 public:
  ModularPoint() : tau_(0.0, 1.0) {}
  explicit ModularPoint(Complex tau) : tau_(tau) {
    if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half-plane");
  }
  const Complex& tau() const { return tau_; }
  Complex q() const;
  // Length of a shortest nonzero vector of Z tau + Z.
  double shortest_vector() const;

 private:
  Complex tau_;
};

// Value with an estimate of its absolute error.
struct Estimate {
  Complex value;
  double error = 0.0;
};

constexpr double kPi = 3.14159265358979323846264338327950288;
inline const Complex kTwoPiI{0.0, 2.0 * kPi};

// "a+bi", "a-bi", "bi", "a", "i", "-i".
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z, int digits = 17);

}  // namespace mwp
