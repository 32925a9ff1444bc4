#pragma once

#include <functional>
#include <optional>
#include <string_view>

namespace chdyn {

// Search interval on the real axis. lo < hi is enforced on construction;
// the sign change of the target is checked by the solver.
class RealBracket {
 public:
  // Throws DomainError(InvalidBracket) unless lo < hi (both finite).
  RealBracket(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }

 private:
  double lo_;
  double hi_;
};

enum class SpecialParamKind { Root, Q0, AQ, AStar };

std::string_view to_string(SpecialParamKind kind) noexcept;

struct SpecialParamResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  SpecialParamKind kind = SpecialParamKind::Root;
  RealBracket bracket{0.0, 1.0};  // search interval the value came from
  double tolerance = 0.0;
};

using RealFunction = std::function<double(double)>;

/// Bracketed root of g: one bisection and then one secant (regula falsi) step
/// per iteration, the secant step skipped whenever its point leaves the
/// bracket. Stops at |g| <= tol or bracket width <= 1e-14. Every iteration at
/// least halves the bracket. Throws NoSignChange.
SpecialParamResult real_root_bisect(const RealFunction& g, const RealBracket& bracket, double tol,
                                    SpecialParamKind kind = SpecialParamKind::Root);

struct TwoCycle {
  double q0 = 0.0;
  double q_inf = 0.0;
  double residual = 0.0;  // |R_a^2(q0) - q0|
};

/// Real 2-cycle {q0, q_inf} of R_a with 0 < q0 < 1 < q_inf, searched for q0 in
/// `seed`. Throws CycleNotFound if R_a^2(x) - x has no sign change there or the
/// root found is not a genuine 2-cycle.
TwoCycle q0_cycle(double a, std::optional<RealBracket> seed = std::nullopt);

/// Default search intervals.
RealBracket default_q0_bracket();
RealBracket default_a_q_bracket();
RealBracket default_a_star_bracket(double a_q);

/// v_{a,0} - q0(a), negative between a_q and 0.
double a_q_target(double a);
/// R_a^2(v_{a,0}) on the real branch.
double a_star_target(double a);

/// Parameter a_q where the positive critical value meets q0(a). Residual <= 1e-10.
SpecialParamResult find_a_q(std::optional<RealBracket> bracket = std::nullopt);

/// Parameter a* in (a_q, 0) with R_a^2(v_{a,0}) = 0. Residual <= 1e-10.
/// Without a bracket, a_q is solved first and (a_q + 1e-6, -0.005) is used.
SpecialParamResult find_a_star(std::optional<RealBracket> bracket = std::nullopt);

}  // namespace chdyn
