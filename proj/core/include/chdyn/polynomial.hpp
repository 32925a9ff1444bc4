#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "chdyn/complex.hpp"

namespace chdyn {

// Dense polynomial with complex coefficients in ascending degree order.
// Trailing (leading-degree) exact zeros are trimmed on construction, so the
// last stored coefficient is nonzero and the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial monomial(int degree, Complex coeff = 1.0);
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex coeff(int k) const noexcept;
  Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  // Horner evaluation.
  Complex operator()(Complex z) const noexcept;
  // Value and first derivative in one Horner pass.
  void eval_with_derivative(Complex z, Complex& value, Complex& deriv) const noexcept;
  // Horner evaluation of the coefficient-reversed polynomial z^deg p(1/z) at w.
  Complex eval_reversed(Complex w) const noexcept;

  Polynomial derivative() const;
  // Number of leading exact-zero low-order coefficients (multiplicity of the root 0).
  int low_order_zeros() const noexcept;
  // Divide by z^k; requires k <= low_order_zeros().
  Polynomial shift_down(int k) const;
  // Synthetic division by (z - root); the remainder is dropped.
  Polynomial deflate(Complex root) const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Complex s, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

}  // namespace chdyn
