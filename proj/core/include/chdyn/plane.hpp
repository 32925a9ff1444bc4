#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "chdyn/complex.hpp"

namespace chdyn {

enum class PlaneKind { DynamicalCH, DynamicalMcMullen, ParameterCH, ParameterMcMullen };

std::string_view to_string(PlaneKind kind) noexcept;

inline bool is_dynamical(PlaneKind kind) noexcept {
  return kind == PlaneKind::DynamicalCH || kind == PlaneKind::DynamicalMcMullen;
}

// Rectangular sampling window. Pixel (0, 0) is the top-left corner; i runs
// along the real axis and j down the imaginary axis.
struct PlaneSpec {
  Complex center;
  double width = 1.0;
  double height = 1.0;
  int nx = 1;
  int ny = 1;
  int max_iter = 200;
  PlaneKind kind = PlaneKind::DynamicalCH;
  // Family parameters; a for dynamical-CH, lambda/n/d for dynamical-McMullen,
  // n/d for parameter-McMullen.
  Complex a;
  Complex lambda{1.0, 0.0};
  int n = 4;
  int d = 2;

  Complex pixel_center(int i, int j) const noexcept;
  // Throws DomainError(InvalidArgument) for non-positive sizes or resolution.
  void validate() const;
  // width * ny / nx: square pixels.
  static double square_height(double width, int nx, int ny) noexcept;
};

enum class CellLabel : std::uint8_t {
  Root0,
  Root1,
  Root2,
  Escaped,
  Cantor,
  CantorCircles,
  Sierpinski,
  Unresolved,
  Degenerate,
};

std::string_view to_string(CellLabel label) noexcept;

struct CellResult {
  CellLabel label = CellLabel::Unresolved;
  int iter = 0;

  friend bool operator==(const CellResult&, const CellResult&) = default;
};

struct PlaneGrid {
  PlaneSpec spec;
  std::vector<CellResult> cells;  // row-major, nx * ny

  const CellResult& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * spec.nx + i]; }
};

// Single cell, computed from the spec alone.
CellResult compute_cell(const PlaneSpec& spec, int i, int j);

/// Per pixel: for dynamical-CH the cube root of unity reached (within 1e-6,
/// held for 3 more steps) and the step it was first reached; for
/// dynamical-McMullen the first step beyond the escape radius.
/// workers == 0 uses the hardware concurrency. Output is independent of it.
PlaneGrid render_dynamical_plane(const PlaneSpec& spec, unsigned workers = 0);

/// Per pixel parameter: the trichotomy class (Degenerate for excluded values).
PlaneGrid render_parameter_plane(const PlaneSpec& spec, unsigned workers = 0);

PlaneGrid render_plane(const PlaneSpec& spec, unsigned workers = 0);

}  // namespace chdyn
