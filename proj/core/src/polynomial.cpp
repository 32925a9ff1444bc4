#include "chdyn/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace chdyn {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(int degree, Complex coeff) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{});
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  for (Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex{});
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex Polynomial::coeff(int k) const noexcept {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void Polynomial::eval_with_derivative(Complex z, Complex& value, Complex& deriv) const noexcept {
  value = {};
  deriv = {};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

Complex Polynomial::eval_reversed(Complex w) const noexcept {
  Complex acc{};
  for (Complex c : coeffs_) acc = acc * w + c;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

int Polynomial::low_order_zeros() const noexcept {
  int k = 0;
  while (k < degree() && coeffs_[static_cast<std::size_t>(k)] == Complex{}) ++k;
  return k;
}

Polynomial Polynomial::shift_down(int k) const {
  assert(k >= 0 && k <= low_order_zeros());
  return Polynomial(std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::deflate(Complex root) const {
  if (coeffs_.size() <= 1) return {};
  const std::size_t n = coeffs_.size() - 1;
  std::vector<Complex> q(n);
  Complex carry{};
  for (std::size_t k = n; k-- > 0;) {
    carry = coeffs_[k + 1] + carry * root;
    q[k] = carry;
  }
  return Polynomial(std::move(q));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Complex> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Complex{});
  for (std::size_t k = 0; k < lhs.coeffs_.size(); ++k) c[k] += lhs.coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs + Complex{-1.0, 0.0} * rhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Complex> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Complex{});
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs_);
  for (Complex& x : c) x *= s;
  return Polynomial(std::move(c));
}

}  // namespace chdyn
