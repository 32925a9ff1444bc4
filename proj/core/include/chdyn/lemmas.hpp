#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chdyn/complex.hpp"

namespace chdyn {

/// Outcome of a sampling-based check of a quantitative statement.
///
/// worst_value is the extreme of the sampled quantity and bound the value it
/// must stay below (or above, for lower bounds); worst_ratio normalises the two
/// so that passed == (worst_ratio < 1). A witness sample is kept only on failure.
struct LemmaCheckResult {
  std::string lemma_id;
  Complex parameter;
  int samples = 0;
  std::uint64_t seed = 0;
  double worst_value = 0.0;
  double bound = 0.0;
  double worst_ratio = 0.0;
  bool passed = false;
  std::optional<Complex> witness;
  // Secondary measurements in emission order.
  std::vector<std::pair<std::string, double>> details;
};

/// Bound on the z^-2 behaviour of R_a over the annulus 1 < |b| < 3:
/// 1 + max |(15 + 2b^3) / (3b^2)| = 1 + 17/3.
inline constexpr double kAnnulusConstant = 20.0 / 3.0;

/// |R_a(zeta z) - zeta R_a(z)| / (1 + |R_a(z)|) < 1e-12 over random z,
/// keeping 1e-3 away from the poles.
LemmaCheckResult check_symmetry(Complex a, int samples = 1000, std::uint64_t seed = 0);

/// For z = b a^{-1/3}, 1 < |b| < 3: |R_a(z)| < (20/3) |a|^{2/3}, and
/// | |R_a(z)| - |(15+2b^3)/(3b^2)| |a|^{2/3} | / |a|^{2/3} < 0.05.
/// Throws ParameterTooLarge unless 0 < |a| <= 1e-3.
LemmaCheckResult check_annulus_bound(Complex a, int samples = 10000, std::uint64_t seed = 0);

/// |R_a^2(z)| > |a|^{-1/3} for 0 < |z| < C |a|^{2/3}.
/// Throws ParameterTooLarge unless 0 < |a| <= 1e-3 and 0 < C <= 0.1.
LemmaCheckResult check_small_disk_bound(Complex a, double disk_constant = 0.1, int samples = 10000,
                                        std::uint64_t seed = 0);

/// sup |R_a - R_0| over a grid in |z| <= radius (0.05 away from the poles of
/// R_0) against K |a|, K taken from the split R_a = (N0 + a N1) / (D0 + a D1)
/// as max (|N1||D0| + |N0||D1|) / (|D0| (|D0| - |a||D1|)). Requires |a| <= 1e-2.
LemmaCheckResult check_uniform_convergence(Complex a, double radius = 3.0, int grid = 101);

struct NormalizeInput {
  Complex a6;  // z^6 coefficient
  Complex b3;  // z^3 coefficient
  Complex l0;  // constant term, all over z^2
};

struct NormalizeResult {
  Complex lambda;
  Complex b;
  Complex delta;    // sqrt(b^2 + 32 lambda)
  Complex w_plus;   // (-b + delta) / 8
  Complex w_minus;  // (-b - delta) / 8
};

/// Conjugates (a6 z^6 + b3 z^3 + l0) / z^2 by z -> z / cbrt(a6) to
/// (z^6 + b z^3 + lambda) / z^2 with b = b3 and lambda = a6 l0, and checks that
/// it is the McMullen map z^4 + lambda/z^2.
/// Throws InvalidArgument if a6 = 0 or l0 = 0, NotMcMullenForm if
/// |b| > 1e-10 (1 + |lambda|), DegenerateDelta if delta = 0.
NormalizeResult mcmullen_normalize(const NormalizeInput& input);

/// Round trip through the normal form: for random lambda and random cube roots
/// u of random a6, the conjugate u^{-1} M_lambda(u z) written as
/// (u^3 z^6 + lambda / u^3) / z^2 must normalise back to lambda (relative
/// 1e-12) with w+ w- = -lambda/2, and inputs with b != 0 must be rejected.
LemmaCheckResult check_normalize_roundtrip(int samples = 100, std::uint64_t seed = 0);

/// w+ (w+ + b - 2w-)^3 - w- (w- + b - 2w+)^3 for the critical-point roots of
/// 4w^2 + bw - 2 lambda; it equals 27 delta^3 b / 256.
Complex critical_value_coincidence(Complex b, Complex lambda);

}  // namespace chdyn
