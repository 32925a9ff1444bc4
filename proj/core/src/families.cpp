#include "chdyn/families.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "chdyn/errors.hpp"

namespace chdyn {

namespace {

constexpr double kDegenerateTol = 1e-12;

bool near(Complex a, double value) { return std::abs(a - value) <= kDegenerateTol; }

void require_nondegenerate(Complex a, std::initializer_list<double> excluded, const char* what) {
  for (double v : excluded)
    if (near(a, v)) throw DomainError(ErrorKind::DegenerateParameter, what);
}

}  // namespace

CHParams CHParams::from_a(Complex a, int n) { return {a, alpha_from_a(a), n}; }

CHParams CHParams::from_alpha(Complex alpha, int n) { return {a_from_alpha(alpha), alpha, n}; }

void McMullenParams::validate() const {
  if (lambda == Complex{}) throw DomainError(ErrorKind::LambdaZero, "McMullen parameter lambda must be nonzero");
  if (n < 2 || d < 1) throw DomainError(ErrorKind::InvalidArgument, "McMullen exponents need n >= 2, d >= 1");
}

Complex alpha_a_convert(Complex x, ParamDirection direction) noexcept {
  return direction == ParamDirection::AlphaToA ? 5.0 - 4.0 * x : (5.0 - x) / 4.0;
}

Polynomial cubic_minus_one() { return Polynomial{-1.0, 0.0, 0.0, 1.0}; }

Complex ch_step(const Polynomial& f, Complex alpha, Complex z) {
  const Polynomial df = f.derivative();
  const Polynomial d2f = df.derivative();
  const Complex fz = f(z);
  const Complex dfz = df(z);
  if (dfz == Complex{}) throw DomainError(ErrorKind::DerivativeVanishes, "f'(z) = 0");
  const Complex L = fz * d2f(z) / (dfz * dfz);
  const Complex denom = 1.0 - alpha * L;
  if (denom == Complex{}) throw DomainError(ErrorKind::HalleyDenominatorVanishes, "1 - alpha L_f(z) = 0");
  return z - (1.0 + 0.5 * L / denom) * fz / dfz;
}

RationalMap chebyshev_halley_cubic(Complex a) {
  Polynomial num{3.0 - a, 0.0, 0.0, 15.0 - a, 0.0, 0.0, 2.0 * a};
  Polynomial den{0.0, 0.0, 3.0 * (5.0 - a), 0.0, 0.0, 3.0 * (1.0 + a)};
  return {std::move(num), std::move(den)};
}

Complex singular_alpha(int n) {
  return static_cast<double>(2 * n - 1) / static_cast<double>(2 * n - 2);
}

RationalMap chebyshev_halley_map(int n, Complex alpha) {
  if (n < 2) throw DomainError(ErrorKind::InvalidArgument, "chebyshev_halley_map needs n >= 2");
  const double nd = n;
  std::vector<Complex> num(static_cast<std::size_t>(2 * n) + 1, Complex{});
  std::vector<Complex> den(static_cast<std::size_t>(2 * n), Complex{});

  num[0] = (1.0 - 2.0 * alpha) * (nd - 1.0);
  num[static_cast<std::size_t>(n)] = 2.0 - 4.0 * alpha - 4.0 * nd + 6.0 * alpha * nd - 2.0 * alpha * nd * nd;
  // Vanishes exactly at the singular alpha; snap rounding noise so the degree drops.
  Complex top = (1.0 - 2.0 * nd) + 2.0 * alpha * (nd - 1.0);
  if (std::abs(top) <= 1e-14 * (1.0 + std::abs(alpha) * nd)) top = Complex{};
  num[static_cast<std::size_t>(2 * n)] = (nd - 1.0) * top;

  den[static_cast<std::size_t>(n - 1)] = 2.0 * nd * alpha * (1.0 - nd);
  den[static_cast<std::size_t>(2 * n - 1)] = 2.0 * nd * (alpha * (nd - 1.0) - nd);
  return {Polynomial(std::move(num)), Polynomial(std::move(den))};
}

RationalMap mcmullen_map(const McMullenParams& params) {
  params.validate();
  Polynomial num = Polynomial::monomial(params.n + params.d) + Polynomial{params.lambda};
  return {std::move(num), Polynomial::monomial(params.d)};
}

std::array<Complex, 3> ch_critical_points(Complex a) {
  require_nondegenerate(a, {0.0, -1.0, 3.0, 5.0}, "critical points undefined at a in {0, -1, 3, 5}");
  const Complex base = principal_cbrt((15.0 - 8.0 * a + a * a) / (a * (a + 1.0)));
  return {base, zeta_pow(1) * base, zeta_pow(2) * base};
}

CriticalValueBranch ch_critical_value_branch(Complex a) {
  require_nondegenerate(a, {0.0, -1.0, 3.0, 5.0}, "critical values undefined at a in {0, -1, 3, 5}");
  const auto crit = ch_critical_points(a);
  const RationalMap map = chebyshev_halley_cubic(a);

  const Complex scale = (25.0 - 6.0 * a + a * a) / ((a - 5.0) * (a - 5.0) * (a + 1.0));
  const Complex root = principal_cbrt(a * a * (15.0 - 8.0 * a + a * a) / (a + 1.0));
  std::array<Complex, 3> printed{};
  std::array<Complex, 3> direct{};
  double magnitude = 0.0;
  for (int j = 0; j < 3; ++j) {
    printed[j] = zeta_pow(j) * scale * root;
    const ExtendedComplex image = map(crit[j]);
    if (image.is_infinite()) throw DomainError(ErrorKind::DegenerateParameter, "critical point is a pole");
    direct[j] = image.value();
    magnitude = std::max(magnitude, std::abs(direct[j]));
  }

  CriticalValueBranch best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    double worst = 0.0;
    std::array<Complex, 3> candidate{};
    for (int j = 0; j < 3; ++j) {
      candidate[j] = zeta_pow(k) * printed[j];
      worst = std::max(worst, std::abs(candidate[j] - direct[j]));
    }
    if (worst < best.residual) best = {candidate, k, worst};
  }
  if (best.residual > 1e-9 * (1.0 + magnitude))
    throw DomainError(ErrorKind::BranchUnresolved, "no cube-root branch reproduces R_a(c)");
  return best;
}

std::array<Complex, 3> ch_critical_values(Complex a) { return ch_critical_value_branch(a).values; }

double ch_real_critical_value(double a) {
  if (!(a > -1.0 && a < 0.0)) throw DomainError(ErrorKind::DegenerateParameter, "real critical value needs a in (-1, 0)");
  const double c = std::cbrt((15.0 - 8.0 * a + a * a) / (a * (a + 1.0)));
  const ExtendedComplex v = chebyshev_halley_cubic(a)(Complex{c, 0.0});
  if (v.is_infinite()) throw DomainError(ErrorKind::DegenerateParameter, "critical point is a pole");
  return v.value().real();
}

std::vector<ExtendedComplex> ch_fixed_points(Complex a) {
  require_nondegenerate(a, {-3.0}, "fixed-point formula undefined at a = -3");
  const Complex base = -principal_cbrt(-(a - 3.0) / (a + 3.0));
  const RationalMap map = chebyshev_halley_cubic(a);
  std::vector<ExtendedComplex> out;
  out.reserve(7);
  for (int j = 0; j < 3; ++j) {
    const Complex x = zeta_pow(j) * base;
    const ExtendedComplex image = map(x);
    if (image.is_infinite() || std::abs(image.value() - x) > 1e-9 * (1.0 + std::abs(x)))
      throw DomainError(ErrorKind::BranchUnresolved, "fixed-point branch does not satisfy R_a(x) = x");
    out.emplace_back(x);
  }
  for (int j = 0; j < 3; ++j) out.emplace_back(zeta_pow(j));
  out.push_back(kInfinity);
  return out;
}

CriticalData ch_critical_data(Complex a) {
  const auto crit = ch_critical_points(a);
  const auto values = ch_critical_values(a);
  return {{crit.begin(), crit.end()}, {values.begin(), values.end()}, ch_fixed_points(a)};
}

std::vector<Complex> mcmullen_critical_points(const McMullenParams& params) {
  params.validate();
  const int count = params.n + params.d;
  const Complex target = static_cast<double>(params.d) * params.lambda / static_cast<double>(params.n);
  const Complex base = std::polar(std::pow(std::abs(target), 1.0 / count), std::arg(target) / count);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(base * std::polar(1.0, 2.0 * std::numbers::pi * k / count));
  return out;
}

}  // namespace chdyn
