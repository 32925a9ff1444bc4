#pragma once

// Test-only reference computations. Nothing here goes through RationalMap,
// the root finder or the closed-form helpers of the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>

namespace oracle {

using C = std::complex<double>;

// R_a straight from its defining quotient, no coordinate switch or cancellation.
inline C cubic_family(C a, C z) {
  const C z3 = z * z * z;
  return (2.0 * a * z3 * z3 + (15.0 - a) * z3 + 3.0 - a) / (3.0 * z * z * (5.0 - a + (1.0 + a) * z3));
}

// R_a through the rewriting (15z^3 + 3 + a(z^3-1)(2z^3+1)) / (3z^2(z^3+5) + 3a z^2(z^3-1)).
inline C cubic_family_split(C a, C z) {
  const C z3 = z * z * z;
  return (15.0 * z3 + 3.0 + a * (z3 - 1.0) * (2.0 * z3 + 1.0)) / (3.0 * z * z * (z3 + 5.0) + a * 3.0 * z * z * (z3 - 1.0));
}

inline C mcmullen(int n, int d, C lambda, C z) { return std::pow(z, n) + lambda / std::pow(z, d); }

// Central difference.
inline C derivative(const std::function<C(C)>& f, C z, double h = 1e-6) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

// Plain bisection to bracket width tol.
inline double bisect(const std::function<double(double)>& g, double lo, double hi, double tol = 1e-13) {
  double glo = g(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Deterministic samples for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  C complex_in_annulus(double rmin, double rmax) {
    const double r = std::exp(uniform(std::log(rmin), std::log(rmax)));
    return std::polar(r, uniform(0.0, 2.0 * 3.14159265358979323846));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
