#include "chdyn/trichotomy.hpp"

#include <algorithm>
#include <limits>

#include "chdyn/errors.hpp"
#include "chdyn/roots.hpp"

namespace chdyn {

std::string_view to_string(TrichotomyClass cls) noexcept {
  switch (cls) {
    case TrichotomyClass::Cantor: return "Cantor";
    case TrichotomyClass::CantorCircles: return "CantorCircles";
    case TrichotomyClass::Sierpinski: return "Sierpinski";
    case TrichotomyClass::Unresolved: return "Unresolved";
  }
  return "Unresolved";
}

std::string_view to_string(OrbitEventKind kind) noexcept {
  switch (kind) {
    case OrbitEventKind::Escape: return "escape";
    case OrbitEventKind::PolePassage: return "pole-passage";
    case OrbitEventKind::RootProximity: return "root-proximity";
  }
  return "escape";
}

std::string_view to_string(Family family) noexcept {
  return family == Family::McMullen ? "mcmullen" : "ch";
}

OrbitRecord orbit(const RationalMap& map, Complex z0, const OrbitOptions& options) {
  OrbitRecord rec;
  rec.points.reserve(static_cast<std::size_t>(std::min(options.max_iter, 4096)) + 1);
  ExtendedComplex z{z0};
  for (int k = 0;; ++k) {
    rec.points.push_back(z);
    if (z.is_infinite()) {
      rec.events.push_back({k, OrbitEventKind::PolePassage});
      return rec;
    }
    if (std::abs(z.value()) > options.stop_radius) {
      rec.events.push_back({k, OrbitEventKind::Escape});
      return rec;
    }
    for (Complex p : options.attractors) {
      if (std::abs(z.value() - p) < options.attractor_radius) {
        rec.events.push_back({k, OrbitEventKind::RootProximity});
        return rec;
      }
    }
    if (k == options.max_iter) {
      rec.truncated = true;
      return rec;
    }
    z = map(z);
  }
}

OrbitRecord orbit(const RationalMap& map, Complex z0, int max_iter, double stop_radius) {
  OrbitOptions options;
  options.max_iter = max_iter;
  options.stop_radius = stop_radius;
  return orbit(map, z0, options);
}

double escape_radius(const McMullenParams& params) {
  params.validate();
  return std::max(1.0, std::pow(2.0 + std::abs(params.lambda), 1.0 / (params.n - 1)));
}

namespace {

bool within_ten_percent(double value, double threshold) {
  return value >= 0.9 * threshold && value <= 1.1 * threshold;
}

}  // namespace

TrichotomyReport classify_mcmullen(const McMullenParams& params, int max_iter, std::size_t critical_index) {
  params.validate();
  const RationalMap map = mcmullen_map(params);
  const auto crit = mcmullen_critical_points(params);

  TrichotomyReport report;
  report.family = Family::McMullen;
  report.parameter = params.lambda;
  report.n = params.n;
  report.d = params.d;
  report.max_iter = max_iter;
  report.thresholds.escape_radius = escape_radius(params);
  report.thresholds.trap_door_radius = std::pow(std::abs(params.lambda), 1.0 / (params.n + params.d));

  OrbitRecord rec = orbit(map, crit.at(critical_index % crit.size()), max_iter, report.thresholds.escape_radius);
  if (rec.events.empty()) {
    report.cls = TrichotomyClass::Unresolved;
    report.evidence = std::move(rec);
    return report;
  }

  const int e = rec.events.back().index;
  rec.events.clear();
  if (e <= 1) {
    report.cls = TrichotomyClass::Cantor;
    rec.events.push_back({e, OrbitEventKind::Escape});
    report.evidence = std::move(rec);
    return report;
  }

  const int q = e - 1;
  const double zq = rec.points[static_cast<std::size_t>(q)].modulus();
  report.boundary_adjacent = within_ten_percent(zq, report.thresholds.trap_door_radius);
  if (zq < report.thresholds.trap_door_radius) {
    rec.events.push_back({q, OrbitEventKind::PolePassage});
    report.cls = q == 1 ? TrichotomyClass::CantorCircles : TrichotomyClass::Sierpinski;
    report.m = q + 1;
  } else {
    report.cls = TrichotomyClass::Cantor;
  }
  rec.events.push_back({e, OrbitEventKind::Escape});
  report.evidence = std::move(rec);
  return report;
}

namespace {

// Critical point of R_a^2 in the small annulus around 0: the preimage of c
// of least modulus. Falls back to c itself should the root finder fail.
Complex inner_critical_point(const RationalMap& map, Complex c) {
  try {
    const auto roots = find_roots(map.num() - c * map.den());
    return *std::min_element(roots.begin(), roots.end(),
                             [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
  } catch (const DomainError&) {
    return c;
  }
}

}  // namespace

TrichotomyReport classify_ra(Complex a, int max_iter, int critical_index) {
  if (a == Complex{}) throw DomainError(ErrorKind::DegenerateParameter, "classification needs a != 0");
  if (std::abs(a) >= 0.1) throw DomainError(ErrorKind::ParameterTooLarge, "classification is calibrated for |a| < 0.1");

  const RationalMap map = chebyshev_halley_cubic(a);
  const int j = ((critical_index % 3) + 3) % 3;
  const Complex c = ch_critical_points(a)[static_cast<std::size_t>(j)];
  const Complex v = ch_critical_values(a)[static_cast<std::size_t>(j)];

  TrichotomyReport report;
  report.family = Family::ChebyshevHalley;
  report.parameter = a;
  report.n = 3;
  report.d = 0;
  report.max_iter = max_iter;
  report.thresholds.pole_threshold = std::max(20.0, std::pow(std::abs(a), -1.0 / 3.0));
  report.thresholds.root_radius = 0.2;
  const double pole = report.thresholds.pole_threshold;
  const double near_root = report.thresholds.root_radius;

  OrbitRecord& rec = report.evidence;
  rec.points.push_back(inner_critical_point(map, c));
  rec.points.push_back(v);

  ExtendedComplex z{v};
  for (int k = 1; k <= max_iter; ++k) {
    double root_dist = std::numeric_limits<double>::infinity();
    if (z.is_finite())
      for (int r = 0; r < 3; ++r) root_dist = std::min(root_dist, std::abs(z.value() - zeta_pow(r)));
    if (root_dist < near_root) {
      rec.events.push_back({k, OrbitEventKind::RootProximity});
      report.cls = TrichotomyClass::Cantor;
      report.boundary_adjacent = report.boundary_adjacent || root_dist >= 0.9 * near_root;
      return report;
    }
    const ExtendedComplex y = map(z);
    const double ymod = y.modulus();
    if (ymod > pole) {
      rec.events.push_back({k, OrbitEventKind::PolePassage});
      report.cls = k == 1 ? TrichotomyClass::CantorCircles : TrichotomyClass::Sierpinski;
      report.m = k + 1;
      report.boundary_adjacent = report.boundary_adjacent || ymod <= 1.1 * pole;
      return report;
    }
    // Near misses before the deciding event also mark the report.
    if (root_dist <= 1.1 * near_root || ymod >= 0.9 * pole) report.boundary_adjacent = true;
    z = map(y);
    rec.points.push_back(z);
  }
  rec.truncated = true;
  report.cls = TrichotomyClass::Unresolved;
  return report;
}

}  // namespace chdyn
