#include "chdyn/special_params.hpp"

#include <cmath>

#include "chdyn/errors.hpp"
#include "chdyn/families.hpp"

namespace chdyn {

RealBracket::RealBracket(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw DomainError(ErrorKind::InvalidBracket, "bracket needs finite lo < hi");
}

std::string_view to_string(SpecialParamKind kind) noexcept {
  switch (kind) {
    case SpecialParamKind::Root: return "root";
    case SpecialParamKind::Q0: return "q0";
    case SpecialParamKind::AQ: return "a-q";
    case SpecialParamKind::AStar: return "a-star";
  }
  return "root";
}

SpecialParamResult real_root_bisect(const RealFunction& g, const RealBracket& bracket, double tol,
                                    SpecialParamKind kind) {
  double lo = bracket.lo();
  double hi = bracket.hi();
  double glo = g(lo);
  double ghi = g(hi);

  SpecialParamResult result{.kind = kind, .bracket = bracket, .tolerance = tol};
  if (glo == 0.0 || ghi == 0.0) {
    // An endpoint root is still reported, but never outside the bracket.
    result.value = glo == 0.0 ? lo : hi;
    result.residual = 0.0;
    return result;
  }
  if (!(std::signbit(glo) != std::signbit(ghi)) || std::isnan(glo) || std::isnan(ghi))
    throw DomainError(ErrorKind::NoSignChange, "target has no sign change on the bracket");

  double best_x = 0.5 * (lo + hi);
  double best_g = std::abs(g(best_x));

  auto consider = [&](double x, double gx) {
    if (std::abs(gx) < best_g) {
      best_g = std::abs(gx);
      best_x = x;
    }
  };
  auto shrink = [&](double x, double gx) {
    if (std::signbit(gx) == std::signbit(glo)) {
      lo = x;
      glo = gx;
    } else {
      hi = x;
      ghi = gx;
    }
  };

  constexpr int kMaxIterations = 200;
  int it = 0;
  while (it < kMaxIterations && best_g > tol && hi - lo > 1e-14) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    const double gmid = g(mid);
    consider(mid, gmid);
    if (gmid == 0.0) break;
    shrink(mid, gmid);

    const double secant = hi - ghi * (hi - lo) / (ghi - glo);
    if (std::isfinite(secant) && secant > lo && secant < hi) {
      const double gs = g(secant);
      consider(secant, gs);
      if (gs == 0.0) break;
      shrink(secant, gs);
    }
  }
  result.value = best_x;
  result.residual = best_g;
  result.iterations = it;
  return result;
}

RealBracket default_q0_bracket() { return {0.05, 0.5}; }
RealBracket default_a_q_bracket() { return {-0.028, -0.0164}; }
RealBracket default_a_star_bracket(double a_q) { return {a_q + 1e-6, -0.005}; }

namespace {

double real_image(const RationalMap& map, double x) {
  const ExtendedComplex y = map(Complex{x, 0.0});
  return y.is_infinite() ? std::copysign(HUGE_VAL, 1.0) : y.value().real();
}

}  // namespace

TwoCycle q0_cycle(double a, std::optional<RealBracket> seed) {
  const RationalMap map = chebyshev_halley_cubic(a);
  auto second_iterate = [&](double x) { return real_image(map, real_image(map, x)); };
  const RealBracket bracket = seed.value_or(default_q0_bracket());

  SpecialParamResult root;
  try {
    root = real_root_bisect([&](double x) { return second_iterate(x) - x; }, bracket, 1e-13, SpecialParamKind::Q0);
  } catch (const DomainError& e) {
    if (e.kind() == ErrorKind::NoSignChange)
      throw DomainError(ErrorKind::CycleNotFound, "R_a^2(x) - x keeps its sign on the q0 bracket");
    throw;
  }

  TwoCycle cycle{root.value, real_image(map, root.value), root.residual};
  const bool genuine = cycle.q0 > 0.0 && cycle.q0 < 1.0 && cycle.q_inf > 1.0 &&
                       std::abs(cycle.q_inf - cycle.q0) > 1e-6;
  if (!genuine) throw DomainError(ErrorKind::CycleNotFound, "root found is not a 2-cycle with 0 < q0 < 1 < q_inf");
  return cycle;
}

double a_q_target(double a) { return ch_real_critical_value(a) - q0_cycle(a).q0; }

double a_star_target(double a) {
  const RationalMap map = chebyshev_halley_cubic(a);
  return real_image(map, real_image(map, ch_real_critical_value(a)));
}

SpecialParamResult find_a_q(std::optional<RealBracket> bracket) {
  return real_root_bisect(a_q_target, bracket.value_or(default_a_q_bracket()), 1e-12, SpecialParamKind::AQ);
}

SpecialParamResult find_a_star(std::optional<RealBracket> bracket) {
  if (!bracket) bracket = default_a_star_bracket(find_a_q().value);
  return real_root_bisect(a_star_target, *bracket, 1e-12, SpecialParamKind::AStar);
}

}  // namespace chdyn
