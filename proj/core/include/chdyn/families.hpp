#pragma once

#include <array>
#include <vector>

#include "chdyn/complex.hpp"
#include "chdyn/polynomial.hpp"
#include "chdyn/rational_map.hpp"

namespace chdyn {

/// Chebyshev-Halley method parameters. The cubic family is written in the
/// parameter a = 5 - 4 alpha; both are stored and kept consistent.
struct CHParams {
  Complex a;
  Complex alpha;
  int n = 3;

  static CHParams from_a(Complex a, int n = 3);
  static CHParams from_alpha(Complex alpha, int n = 3);
};

/// Parameters of z^n + lambda / z^d.
struct McMullenParams {
  int n = 4;
  int d = 2;
  Complex lambda;

  // Throws LambdaZero for lambda == 0 and InvalidArgument for n < 2 or d < 1.
  void validate() const;
};

struct CriticalData {
  std::vector<Complex> critical_points;
  std::vector<Complex> critical_values;
  std::vector<ExtendedComplex> fixed_points;
};

enum class ParamDirection { AlphaToA, AToAlpha };

Complex alpha_a_convert(Complex x, ParamDirection direction) noexcept;
inline Complex a_from_alpha(Complex alpha) noexcept { return alpha_a_convert(alpha, ParamDirection::AlphaToA); }
inline Complex alpha_from_a(Complex a) noexcept { return alpha_a_convert(a, ParamDirection::AToAlpha); }

/// z^3 - 1, the polynomial the cubic family is built from.
Polynomial cubic_minus_one();

/// One step of the Chebyshev-Halley iteration for f:
///   z - (1 + L / (2 (1 - alpha L))) f/f',   L = f f'' / f'^2.
/// Throws DerivativeVanishes when f'(z) = 0 and HalleyDenominatorVanishes when
/// 1 - alpha L = 0.
Complex ch_step(const Polynomial& f, Complex alpha, Complex z);

/// The cubic family R_a = (2a z^6 + (15-a) z^3 + 3 - a) / (3 z^2 (5 - a + (1+a) z^3)).
/// Degree 6 except at a = 0 (degree 5) and a = 3 (degree 4, Halley's method).
RationalMap chebyshev_halley_cubic(Complex a);

/// The method applied to z^n - 1, a degree-2n map, from its expanded quotient.
/// Throws InvalidArgument for n < 2.
RationalMap chebyshev_halley_map(int n, Complex alpha);

/// alpha = (2n-1)/(2n-2), where infinity stops being fixed and maps to 0.
Complex singular_alpha(int n);

/// (z^{n+d} + lambda) / z^d. Throws LambdaZero for lambda == 0.
RationalMap mcmullen_map(const McMullenParams& params);

/// The three free critical points zeta^j cbrt((15 - 8a + a^2) / (a (a+1))),
/// principal cube root. Throws DegenerateParameter for a in {0, -1, 3, 5}.
std::array<Complex, 3> ch_critical_points(Complex a);

struct CriticalValueBranch {
  std::array<Complex, 3> values;
  // Power k with values[j] = zeta^k * (closed form with principal cube root).
  int zeta_power = 0;
  // max_j |values[j] - R_a(c_{a,j})|.
  double residual = 0.0;
};

/// Closed-form critical values, with the cube-root branch fixed so that
/// values[j] = R_a(c_{a,j}). Throws DegenerateParameter for a in {0, -1, 3, 5}
/// and BranchUnresolved if no branch matches to 1e-9.
CriticalValueBranch ch_critical_value_branch(Complex a);
std::array<Complex, 3> ch_critical_values(Complex a);

/// Positive real critical value for real a in (-1, 0), from the real cube root.
double ch_real_critical_value(double a);

/// Finite non-root fixed points zeta^j cbrt((a-3)/(a+3)) on the branch with
/// cbrt(-1) = -1, followed by the cube roots of unity and infinity.
/// Throws DegenerateParameter for a = -3.
std::vector<ExtendedComplex> ch_fixed_points(Complex a);

CriticalData ch_critical_data(Complex a);

/// The n+d solutions of z^{n+d} = d lambda / n. Throws LambdaZero.
std::vector<Complex> mcmullen_critical_points(const McMullenParams& params);

}  // namespace chdyn
