#pragma once

#include <span>
#include <vector>

#include "chdyn/polynomial.hpp"

namespace chdyn {

struct RootFinderOptions {
  int max_sweeps = 200;
  // Residual tolerance factor; see find_roots.
  double residual_tol = 1e-10;
};

// All complex roots of p (degree >= 1), with multiplicity, by Aberth-Ehrlich
// simultaneous iteration started from equispaced points on the circle of
// radius 1 + max|c_k / c_lead|.
//
// Each returned root r satisfies |p(r)| <= tol * (1 + sum_k |c_k| |r|^k), the
// backward-error form of 1e-10 * (1 + max|c_k|) that stays meaningful for
// roots of large modulus. Throws DomainError(NoConvergence) if a root misses
// the tolerance after max_sweeps, DomainError(InvalidArgument) for degree < 1.
std::vector<Complex> find_roots(const Polynomial& p, const RootFinderOptions& options = {});

// Scale used by the residual test: 1 + sum_k |c_k| |z|^k.
double residual_scale(const Polynomial& p, Complex z) noexcept;

// max over a of min over b |a - b|: how far `points` sits from the set `reference`.
double one_sided_set_distance(std::span<const Complex> points, std::span<const Complex> reference);

}  // namespace chdyn
