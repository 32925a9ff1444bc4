#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chdyn/complex.hpp"
#include "chdyn/families.hpp"
#include "chdyn/rational_map.hpp"

namespace chdyn {

enum class OrbitEventKind { Escape, PolePassage, RootProximity };

struct OrbitEvent {
  int index = 0;
  OrbitEventKind kind = OrbitEventKind::Escape;

  friend bool operator==(const OrbitEvent&, const OrbitEvent&) = default;
};

struct OrbitRecord {
  std::vector<ExtendedComplex> points;
  std::vector<OrbitEvent> events;
  // true when max_iter was reached without a terminating event.
  bool truncated = false;
};

struct OrbitOptions {
  int max_iter = 200;
  double stop_radius = 1e12;
  // Points whose neighbourhood of radius attractor_radius ends the orbit.
  std::vector<Complex> attractors;
  double attractor_radius = 0.0;
};

// Forward orbit z0, F(z0), ... until |z| > stop_radius (Escape), a pole is hit
// exactly (PolePassage), an attractor is reached (RootProximity) or max_iter
// steps are taken.
OrbitRecord orbit(const RationalMap& map, Complex z0, const OrbitOptions& options);
OrbitRecord orbit(const RationalMap& map, Complex z0, int max_iter, double stop_radius);

enum class TrichotomyClass { Cantor, CantorCircles, Sierpinski, Unresolved };
enum class Family { McMullen, ChebyshevHalley };

std::string_view to_string(TrichotomyClass cls) noexcept;
std::string_view to_string(OrbitEventKind kind) noexcept;
std::string_view to_string(Family family) noexcept;

struct TrichotomyThresholds {
  double escape_radius = 0.0;     // McMullen: forward-invariant disc complement
  double trap_door_radius = 0.0;  // McMullen: |lambda|^{1/(n+d)}
  double pole_threshold = 0.0;    // CH: max(20, |a|^{-1/3})
  double root_radius = 0.0;       // CH: proximity to a cube root of unity
};

struct TrichotomyReport {
  Family family = Family::McMullen;
  Complex parameter;  // lambda or a
  int n = 4;
  int d = 2;
  int max_iter = 200;

  TrichotomyClass cls = TrichotomyClass::Unresolved;
  std::optional<int> m;
  OrbitRecord evidence;
  TrichotomyThresholds thresholds;
  // A decisive comparison fell within 10% of its threshold.
  bool boundary_adjacent = false;
};

/// max(1, (2 + |lambda|)^{1/(n-1)}). Beyond it |M(z)| >= 2|z|.
double escape_radius(const McMullenParams& params);

/// Escape Trichotomy for z^n + lambda/z^d from one critical orbit.
///
/// e is the first index with |z_e| > escape_radius. e = 1 gives Cantor. For
/// e >= 2 the previous point z_{e-1} decides: inside |lambda|^{1/(n+d)} the
/// pole term dominates and the orbit left through the trap door, giving
/// CantorCircles (e = 2, m = 2) or Sierpinski (m = e). Otherwise Cantor.
/// No escape within max_iter gives Unresolved.
TrichotomyReport classify_mcmullen(const McMullenParams& params, int max_iter = 200,
                                   std::size_t critical_index = 0);

/// Classification of R_a for small a != 0 through its McMullen-like square.
///
/// The orbit z_1 = v_{a,0}, z_{k+1} = R_a(R_a(z_k)) is followed; y_k = R_a(z_k)
/// beyond max(20, |a|^{-1/3}) is a pole passage, z_k within 0.2 of a cube root
/// of unity is root proximity. The first event decides: pole passage at k = 1
/// is CantorCircles, at k >= 2 Sierpinski with m = k + 1, root proximity first
/// is Cantor. evidence.points[0] is the critical point of R_a^2 near 0 that
/// maps onto c_{a,0}, so evidence.points[k] = z_k.
///
/// Throws DegenerateParameter for a = 0 and ParameterTooLarge for |a| >= 0.1.
TrichotomyReport classify_ra(Complex a, int max_iter = 200, int critical_index = 0);

}  // namespace chdyn
