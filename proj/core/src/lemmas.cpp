#include "chdyn/lemmas.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>

#include "chdyn/errors.hpp"
#include "chdyn/families.hpp"
#include "chdyn/roots.hpp"

namespace chdyn {

namespace {

// Uniform doubles in [0, 1) from the top 53 bits, identical on every platform.
class UnitSampler {
 public:
  explicit UnitSampler(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

double distance_to_nearest(Complex z, const std::vector<Complex>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex p : points) best = std::min(best, std::abs(z - p));
  return best;
}

std::vector<Complex> finite_poles(const RationalMap& map) {
  const Polynomial& den = map.den();
  std::vector<Complex> poles(static_cast<std::size_t>(den.low_order_zeros()), Complex{});
  const Polynomial rest = den.shift_down(den.low_order_zeros());
  if (rest.degree() >= 1) {
    const auto roots = find_roots(rest);
    poles.insert(poles.end(), roots.begin(), roots.end());
  }
  return poles;
}

void finish(LemmaCheckResult& r, std::optional<Complex> worst_sample) {
  r.passed = r.worst_ratio < 1.0;
  if (!r.passed) r.witness = worst_sample;
}

LemmaCheckResult new_result(std::string id, Complex a, int samples, std::uint64_t seed) {
  LemmaCheckResult r;
  r.lemma_id = std::move(id);
  r.parameter = a;
  r.samples = samples;
  r.seed = seed;
  return r;
}

void require_small(Complex a, double limit) {
  if (a == Complex{} || std::abs(a) > limit)
    throw DomainError(ErrorKind::ParameterTooLarge, "check needs 0 < |a| <= " + std::to_string(limit));
}

}  // namespace

LemmaCheckResult check_symmetry(Complex a, int samples, std::uint64_t seed) {
  const RationalMap map = chebyshev_halley_cubic(a);
  const auto poles = finite_poles(map);
  UnitSampler rng(seed);

  LemmaCheckResult r = new_result("symmetry", a, samples, seed);
  r.bound = 1e-12;
  std::optional<Complex> worst_z;
  int taken = 0;
  while (taken < samples) {
    // Log-uniform modulus in [0.1, 10], uniform angle.
    const double modulus = std::exp(std::log(0.1) + rng.next() * std::log(100.0));
    const double angle = 2.0 * std::numbers::pi * rng.next();
    const Complex z = std::polar(modulus, angle);
    if (distance_to_nearest(z, poles) < 1e-3 || distance_to_nearest(kZeta * z, poles) < 1e-3) continue;
    ++taken;
    const ExtendedComplex fz = map(z);
    const ExtendedComplex fzz = map(kZeta * z);
    if (fz.is_infinite() || fzz.is_infinite()) continue;
    const double residual = std::abs(fzz.value() - kZeta * fz.value()) / (1.0 + std::abs(fz.value()));
    if (!worst_z || residual > r.worst_value) {
      r.worst_value = residual;
      worst_z = z;
    }
  }
  r.worst_ratio = r.worst_value / r.bound;
  finish(r, worst_z);
  return r;
}

LemmaCheckResult check_annulus_bound(Complex a, int samples, std::uint64_t seed) {
  require_small(a, 1e-3);
  const RationalMap map = chebyshev_halley_cubic(a);
  const Complex inv_cbrt = 1.0 / principal_cbrt(a);
  const double scale = std::pow(std::abs(a), 2.0 / 3.0);
  constexpr double kLeadingTol = 0.05;
  UnitSampler rng(seed);

  LemmaCheckResult r = new_result("annulus", a, samples, seed);
  r.bound = kAnnulusConstant * scale;
  double worst_bound_ratio = 0.0;
  double worst_leading = 0.0;
  std::optional<Complex> worst_z;
  for (int s = 0; s < samples; ++s) {
    double u = rng.next();
    if (u == 0.0) u = 0.5;  // open annulus
    const Complex b = std::polar(std::exp(u * std::log(3.0)), 2.0 * std::numbers::pi * rng.next());
    const Complex z = b * inv_cbrt;
    const double image = map(z).modulus();
    const double leading = std::abs((15.0 + 2.0 * b * b * b) / (3.0 * b * b));
    const double bound_ratio = image / r.bound;
    const double leading_err = std::abs(image - leading * scale) / scale;
    if (std::max(bound_ratio, leading_err / kLeadingTol) >= std::max(worst_bound_ratio, worst_leading / kLeadingTol))
      worst_z = z;
    if (bound_ratio > worst_bound_ratio) {
      worst_bound_ratio = bound_ratio;
      r.worst_value = image;
    }
    worst_leading = std::max(worst_leading, leading_err);
  }
  r.worst_ratio = std::max(worst_bound_ratio, worst_leading / kLeadingTol);
  r.details = {{"C1", kAnnulusConstant},
               {"max_image_over_bound", worst_bound_ratio},
               {"max_leading_order_error", worst_leading},
               {"leading_order_tolerance", kLeadingTol}};
  finish(r, worst_z);
  return r;
}

LemmaCheckResult check_small_disk_bound(Complex a, double disk_constant, int samples, std::uint64_t seed) {
  require_small(a, 1e-3);
  if (!(disk_constant > 0.0 && disk_constant <= 0.1))
    throw DomainError(ErrorKind::ParameterTooLarge, "small-disk check fixes C' = 1, valid for 0 < C <= 0.1");
  const RationalMap map = chebyshev_halley_cubic(a);
  const double disk = disk_constant * std::pow(std::abs(a), 2.0 / 3.0);
  UnitSampler rng(seed);

  LemmaCheckResult r = new_result("smalldisk", a, samples, seed);
  r.bound = std::pow(std::abs(a), -1.0 / 3.0);
  r.worst_value = std::numeric_limits<double>::infinity();
  std::optional<Complex> worst_z;
  for (int s = 0; s < samples; ++s) {
    double u = rng.next();
    if (u == 0.0) u = 0.5;  // z = 0 is the pole itself
    const Complex z = std::polar(disk * std::sqrt(u), 2.0 * std::numbers::pi * rng.next());
    const double image = iterate(map, z, 2).modulus();
    if (image < r.worst_value) {
      r.worst_value = image;
      worst_z = z;
    }
  }
  r.worst_ratio = r.bound / r.worst_value;
  r.details = {{"C", disk_constant}, {"C_prime", 1.0}};
  finish(r, worst_z);
  return r;
}

LemmaCheckResult check_uniform_convergence(Complex a, double radius, int grid) {
  if (std::abs(a) > 1e-2) throw DomainError(ErrorKind::ParameterTooLarge, "uniform convergence check needs |a| <= 1e-2");
  const RationalMap perturbed = chebyshev_halley_cubic(a);
  const RationalMap base = chebyshev_halley_cubic(0.0);
  std::vector<Complex> poles{0.0};
  for (int j = 0; j < 3; ++j) poles.push_back(zeta_pow(j) * principal_cbrt(Complex{-5.0, 0.0}));

  LemmaCheckResult r = new_result("converge", a, 0, 0);
  double coefficient_bound = 0.0;
  std::optional<Complex> worst_z;
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const double step = 2.0 * radius / (grid - 1);
      const Complex z{-radius + ix * step, -radius + iy * step};
      if (std::abs(z) > radius || distance_to_nearest(z, poles) < 0.05) continue;
      ++r.samples;
      const Complex z3 = z * z * z;
      const Complex n0 = 15.0 * z3 + 3.0;
      const Complex n1 = (z3 - 1.0) * (2.0 * z3 + 1.0);
      const Complex d0 = 3.0 * z * z * (z3 + 5.0);
      const Complex d1 = 3.0 * z * z * (z3 - 1.0);
      const double margin = std::abs(d0) - std::abs(a) * std::abs(d1);
      if (margin > 0.0)
        coefficient_bound = std::max(coefficient_bound,
                                     (std::abs(n1) * std::abs(d0) + std::abs(n0) * std::abs(d1)) /
                                         (std::abs(d0) * margin));
      else
        coefficient_bound = std::numeric_limits<double>::infinity();
      const double diff = std::abs(perturbed(z).value() - base(z).value());
      if (!worst_z || diff > r.worst_value) {
        r.worst_value = diff;
        worst_z = z;
      }
    }
  }
  r.bound = coefficient_bound * std::abs(a);
  if (a == Complex{}) {
    r.worst_ratio = r.worst_value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    r.worst_ratio = r.worst_value / r.bound;
  }
  r.details = {{"K", coefficient_bound}, {"radius", radius}, {"rate", a == Complex{} ? 0.0 : r.worst_value / std::abs(a)}};
  finish(r, worst_z);
  return r;
}

NormalizeResult mcmullen_normalize(const NormalizeInput& input) {
  if (input.a6 == Complex{} || input.l0 == Complex{})
    throw DomainError(ErrorKind::InvalidArgument, "normal form needs a6 != 0 and l0 != 0");
  NormalizeResult out;
  out.b = input.b3;
  out.lambda = input.a6 * input.l0;
  if (std::abs(out.b) > 1e-10 * (1.0 + std::abs(out.lambda)))
    throw DomainError(ErrorKind::NotMcMullenForm, "z^3 coefficient must vanish for three critical values");
  out.delta = std::sqrt(out.b * out.b + 32.0 * out.lambda);
  if (out.delta == Complex{}) throw DomainError(ErrorKind::DegenerateDelta, "b^2 + 32 lambda = 0");
  out.w_plus = (-out.b + out.delta) / 8.0;
  out.w_minus = (-out.b - out.delta) / 8.0;
  if (std::abs(out.w_plus * out.w_minus + out.lambda / 2.0) > 1e-12 * (1.0 + std::abs(out.lambda)))
    throw DomainError(ErrorKind::DegenerateDelta, "w+ w- = -lambda/2 fails");
  return out;
}

LemmaCheckResult check_normalize_roundtrip(int samples, std::uint64_t seed) {
  UnitSampler rng(seed);
  LemmaCheckResult r = new_result("normalize", Complex{}, samples, seed);
  r.bound = 1e-12;
  auto random_complex = [&](double lo, double hi) {
    const double modulus = std::exp(std::log(lo) + rng.next() * std::log(hi / lo));
    return std::polar(modulus, 2.0 * std::numbers::pi * rng.next());
  };
  double worst_identity = 0.0;
  int rejected = 0;
  std::optional<Complex> worst_lambda;
  for (int s = 0; s < samples; ++s) {
    const Complex lambda = random_complex(1e-3, 10.0);
    const Complex a6 = random_complex(0.1, 10.0);
    const Complex u = principal_cbrt(a6) * zeta_pow(static_cast<int>(rng.next() * 3.0));
    const Complex u3 = u * u * u;
    const NormalizeResult out = mcmullen_normalize({u3, 0.0, lambda / u3});
    const double err = std::abs(out.lambda - lambda) / std::abs(lambda);
    if (!worst_lambda || err > r.worst_value) {
      r.worst_value = err;
      worst_lambda = lambda;
    }
    worst_identity = std::max(worst_identity, std::abs(out.w_plus * out.w_minus + out.lambda / 2.0) /
                                                  (1.0 + std::abs(out.lambda)));
    try {
      mcmullen_normalize({u3, random_complex(1e-3, 1.0), lambda / u3});
    } catch (const DomainError& e) {
      if (e.kind() == ErrorKind::NotMcMullenForm) ++rejected;
    }
  }
  const double identity_ratio = worst_identity / 1e-12;
  const double rejection_ratio = rejected == samples ? 0.0 : 2.0;
  r.worst_ratio = std::max({r.worst_value / r.bound, identity_ratio, rejection_ratio});
  r.details = {{"max_w_product_residual", worst_identity}, {"rejected_nonzero_b", static_cast<double>(rejected)}};
  finish(r, worst_lambda);
  return r;
}

Complex critical_value_coincidence(Complex b, Complex lambda) {
  const Complex delta = std::sqrt(b * b + 32.0 * lambda);
  const Complex wp = (-b + delta) / 8.0;
  const Complex wm = (-b - delta) / 8.0;
  return wp * std::pow(wp + b - 2.0 * wm, 3) - wm * std::pow(wm + b - 2.0 * wp, 3);
}

}  // namespace chdyn
