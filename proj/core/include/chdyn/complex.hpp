#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

namespace chdyn {

using Complex = std::complex<double>;

inline const Complex kZeta{-0.5, std::numbers::sqrt3 / 2.0};  // e^{2 pi i / 3}

// zeta^j for any integer j, reduced mod 3 so the three values are bit-stable.
inline Complex zeta_pow(int j) {
  switch (((j % 3) + 3) % 3) {
    case 0: return {1.0, 0.0};
    case 1: return kZeta;
    default: return std::conj(kZeta);
  }
}

inline Complex principal_cbrt(Complex x) {
  if (x == Complex{}) return {};
  return std::polar(std::cbrt(std::abs(x)), std::arg(x) / 3.0);
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// A point of the Riemann sphere: a finite complex number or the point at infinity.
class ExtendedComplex {
 public:
  constexpr ExtendedComplex() = default;
  constexpr ExtendedComplex(Complex z) : value_(z) {}  // NOLINT: implicit by intent
  constexpr ExtendedComplex(double x) : value_(Complex{x, 0.0}) {}  // NOLINT

  static constexpr ExtendedComplex infinity() {
    ExtendedComplex e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  // Precondition: is_finite().
  constexpr Complex value() const noexcept { return value_; }

  std::optional<Complex> finite() const {
    if (infinite_) return std::nullopt;
    return value_;
  }

  // Modulus with +inf for the point at infinity.
  double modulus() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : std::abs(value_);
  }

  friend constexpr bool operator==(const ExtendedComplex& lhs, const ExtendedComplex& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.value_ == rhs.value_;
  }

 private:
  Complex value_{};
  bool infinite_ = false;
};

inline const ExtendedComplex kInfinity = ExtendedComplex::infinity();

}  // namespace chdyn
