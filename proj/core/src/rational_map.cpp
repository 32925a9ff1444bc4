#include "chdyn/rational_map.hpp"

#include <algorithm>
#include <vector>

#include "chdyn/errors.hpp"
#include "chdyn/roots.hpp"

namespace chdyn {

namespace {

// Divides out roots that num and den share, matched greedily by distance.
void cancel_common_roots(Polynomial& num, Polynomial& den) {
  if (num.degree() < 1 || den.degree() < 1) return;
  std::vector<Complex> num_roots, den_roots;
  try {
    num_roots = find_roots(num);
    den_roots = find_roots(den);
  } catch (const DomainError&) {
    return;  // no trustworthy root sets, so nothing is matched
  }
  std::vector<Complex> shared;
  for (Complex r : num_roots) {
    auto best = den_roots.end();
    double best_dist = RationalMap::kCancelTolerance;
    for (auto it = den_roots.begin(); it != den_roots.end(); ++it) {
      const double d = std::abs(*it - r);
      if (d <= best_dist) {
        best_dist = d;
        best = it;
      }
    }
    if (best != den_roots.end()) {
      shared.push_back(0.5 * (r + *best));
      den_roots.erase(best);
    }
  }
  for (Complex r : shared) {
    num = num.deflate(r);
    den = den.deflate(r);
  }
}

}  // namespace

RationalMap::RationalMap(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError(ErrorKind::InvalidArgument, "rational map with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial{1.0};
    return;
  }
  const int common_zero = std::min(num_.low_order_zeros(), den_.low_order_zeros());
  if (common_zero > 0) {
    num_ = num_.shift_down(common_zero);
    den_ = den_.shift_down(common_zero);
  }
  cancel_common_roots(num_, den_);
}

int RationalMap::degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

ExtendedComplex RationalMap::at_infinity() const noexcept {
  if (num_.is_zero()) return Complex{};
  if (num_.degree() > den_.degree()) return kInfinity;
  if (num_.degree() < den_.degree()) return Complex{};
  return num_.leading() / den_.leading();
}

ExtendedComplex RationalMap::operator()(ExtendedComplex point) const noexcept {
  if (point.is_infinite()) return at_infinity();
  const Complex z = point.value();
  return std::abs(z) <= 1.0 ? eval_direct(z) : eval_inverted(z);
}

ExtendedComplex RationalMap::eval_direct(Complex z) const noexcept {
  const Complex d = den_(z);
  if (d == Complex{}) return kInfinity;
  const Complex q = num_(z) / d;
  return is_finite(q) ? ExtendedComplex{q} : kInfinity;
}

ExtendedComplex RationalMap::eval_inverted(Complex z) const noexcept {
  if (z == Complex{}) return eval_direct(z);
  const Complex w = 1.0 / z;
  const Complex d = den_.eval_reversed(w);
  if (d == Complex{}) return kInfinity;
  const Complex ratio = num_.eval_reversed(w) / d;
  const int excess = num_.degree() - den_.degree();
  Complex q = ratio;
  if (excess > 0) {
    for (int k = 0; k < excess; ++k) q *= z;
  } else {
    for (int k = 0; k < -excess; ++k) q *= w;
  }
  return is_finite(q) ? ExtendedComplex{q} : kInfinity;
}

Complex RationalMap::derivative(Complex z) const noexcept {
  Complex n, dn, d, dd;
  num_.eval_with_derivative(z, n, dn);
  den_.eval_with_derivative(z, d, dd);
  return (dn * d - n * dd) / (d * d);
}

Polynomial RationalMap::derivative_numerator() const {
  return num_.derivative() * den_ - num_ * den_.derivative();
}

Complex multiplier_at(const RationalMap& map, ExtendedComplex z) {
  const ExtendedComplex image = map(z);
  if (z.is_infinite()) {
    if (!image.is_infinite()) throw DomainError(ErrorKind::NotFixed, "infinity is not fixed by this map");
    // 1/F(1/w) = w^{dn - dd} rev(den)(w) / rev(num)(w); its derivative at 0 is
    // lead(den)/lead(num) when dn = dd + 1 and vanishes when dn > dd + 1.
    if (map.num().degree() == map.den().degree() + 1) return map.den().leading() / map.num().leading();
    return Complex{};
  }
  const Complex x = z.value();
  if (image.is_infinite() || std::abs(image.value() - x) > 1e-8 * (1.0 + std::abs(x)))
    throw DomainError(ErrorKind::NotFixed, "point is not fixed to residual 1e-8");
  return map.derivative(x);
}

ExtendedComplex iterate(const RationalMap& map, ExtendedComplex z, int times) noexcept {
  for (int k = 0; k < times; ++k) z = map(z);
  return z;
}

}  // namespace chdyn
