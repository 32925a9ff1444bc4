#include "chdyn/roots.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "chdyn/errors.hpp"

namespace chdyn {

double residual_scale(const Polynomial& p, Complex z) noexcept {
  const double r = std::abs(z);
  double acc = 0.0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return 1.0 + acc;
}

std::vector<Complex> find_roots(const Polynomial& p, const RootFinderOptions& options) {
  const int n = p.degree();
  if (n < 1) throw DomainError(ErrorKind::InvalidArgument, "find_roots needs degree >= 1");

  const Complex lead = p.leading();
  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(p.coeff(k) / lead));
  radius += 1.0;

  // A small angular offset keeps the start off symmetric root configurations.
  constexpr double kOffset = 0.4;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + kOffset);

  if (n == 1) return {-p.coeff(0) / lead};

  auto residual_ok = [&](Complex r) {
    return std::abs(p(r)) <= options.residual_tol * residual_scale(p, r);
  };

  // Once every residual is within tolerance, a few more sweeps polish the
  // simple roots to full precision (the iteration converges cubically there).
  constexpr int kPolishSweeps = 3;
  int polished = 0;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    double max_rel_step = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex value, deriv;
      p.eval_with_derivative(z[k], value, deriv);
      if (value == Complex{}) continue;
      const Complex ratio = value / deriv;
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!is_finite(step)) step = ratio;
      if (!is_finite(step)) continue;
      z[k] -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (std::all_of(z.begin(), z.end(), residual_ok)) {
      if (max_rel_step < 1e-15 || ++polished > kPolishSweeps) break;
    }
  }

  for (Complex r : z)
    if (!residual_ok(r)) throw DomainError(ErrorKind::NoConvergence, "Aberth iteration did not meet tolerance");
  return z;
}

double one_sided_set_distance(std::span<const Complex> points, std::span<const Complex> reference) {
  double worst = 0.0;
  for (Complex a : points) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex b : reference) best = std::min(best, std::abs(a - b));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace chdyn
