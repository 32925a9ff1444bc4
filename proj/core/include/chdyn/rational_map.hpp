#pragma once

#include "chdyn/complex.hpp"
#include "chdyn/polynomial.hpp"

namespace chdyn {

// Quotient num/den of polynomials, acting on the Riemann sphere.
//
// Construction cancels common factors: exact powers of z first, then pairs of
// numerator/denominator roots closer than kCancelTolerance. The stored
// quotient is therefore in lowest terms up to that tolerance.
class RationalMap {
 public:
  static constexpr double kCancelTolerance = 1e-10;

  // Throws DomainError(InvalidArgument) if den is the zero polynomial.
  RationalMap(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  int degree() const noexcept;

  // Total on the sphere. For |z| > 1 the quotient is evaluated in w = 1/z from
  // the coefficient-reversed polynomials, so large arguments do not overflow.
  ExtendedComplex operator()(ExtendedComplex z) const noexcept;
  ExtendedComplex operator()(Complex z) const noexcept { return (*this)(ExtendedComplex{z}); }
  ExtendedComplex operator()(double x) const noexcept { return (*this)(ExtendedComplex{x}); }

  // The two evaluation routes behind operator(), exposed for consistency checks.
  ExtendedComplex eval_direct(Complex z) const noexcept;
  ExtendedComplex eval_inverted(Complex z) const noexcept;

  // Image of infinity: ratio of leading coefficients, infinity or zero.
  ExtendedComplex at_infinity() const noexcept;

  // F'(z) by the quotient rule at a finite point where den(z) != 0.
  Complex derivative(Complex z) const noexcept;

  // Numerator of F' (num' den - num den'); its roots are the finite critical
  // points together with multiple poles.
  Polynomial derivative_numerator() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// Multiplier F'(z) at a fixed point z; at infinity the derivative at w = 0 of
// w -> 1/F(1/w). Throws DomainError(NotFixed) when |F(z) - z| > 1e-8 (1 + |z|).
Complex multiplier_at(const RationalMap& map, ExtendedComplex z);

// F^k(z), stopping early at infinity only if the map keeps it there.
ExtendedComplex iterate(const RationalMap& map, ExtendedComplex z, int times) noexcept;

}  // namespace chdyn
