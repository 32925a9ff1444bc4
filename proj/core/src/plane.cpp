#include "chdyn/plane.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "chdyn/errors.hpp"
#include "chdyn/families.hpp"
#include "chdyn/rational_map.hpp"
#include "chdyn/trichotomy.hpp"

namespace chdyn {

std::string_view to_string(PlaneKind kind) noexcept {
  switch (kind) {
    case PlaneKind::DynamicalCH: return "dynamical-CH";
    case PlaneKind::DynamicalMcMullen: return "dynamical-McMullen";
    case PlaneKind::ParameterCH: return "parameter-CH";
    case PlaneKind::ParameterMcMullen: return "parameter-McMullen";
  }
  return "dynamical-CH";
}

std::string_view to_string(CellLabel label) noexcept {
  switch (label) {
    case CellLabel::Root0: return "root0";
    case CellLabel::Root1: return "root1";
    case CellLabel::Root2: return "root2";
    case CellLabel::Escaped: return "escaped";
    case CellLabel::Cantor: return "Cantor";
    case CellLabel::CantorCircles: return "CantorCircles";
    case CellLabel::Sierpinski: return "Sierpinski";
    case CellLabel::Unresolved: return "Unresolved";
    case CellLabel::Degenerate: return "Degenerate";
  }
  return "Unresolved";
}

Complex PlaneSpec::pixel_center(int i, int j) const noexcept {
  const double re = ((i + 0.5) / nx - 0.5) * width;
  const double im = (0.5 - (j + 0.5) / ny) * height;
  return center + Complex{re, im};
}

void PlaneSpec::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) throw DomainError(ErrorKind::InvalidArgument, "plane width/height must be positive");
  if (nx < 1 || ny < 1) throw DomainError(ErrorKind::InvalidArgument, "plane resolution must be at least 1x1");
  if (max_iter < 0) throw DomainError(ErrorKind::InvalidArgument, "max_iter must be non-negative");
}

double PlaneSpec::square_height(double width, int nx, int ny) noexcept { return width * ny / nx; }

namespace {

constexpr double kRootCapture = 1e-6;
constexpr int kConfirmSteps = 3;

std::optional<int> captured_root(ExtendedComplex z) {
  if (z.is_infinite()) return std::nullopt;
  for (int r = 0; r < 3; ++r)
    if (std::abs(z.value() - zeta_pow(r)) < kRootCapture) return r;
  return std::nullopt;
}

CellLabel root_label(int r) { return static_cast<CellLabel>(r); }

CellLabel class_label(TrichotomyClass cls) {
  switch (cls) {
    case TrichotomyClass::Cantor: return CellLabel::Cantor;
    case TrichotomyClass::CantorCircles: return CellLabel::CantorCircles;
    case TrichotomyClass::Sierpinski: return CellLabel::Sierpinski;
    case TrichotomyClass::Unresolved: return CellLabel::Unresolved;
  }
  return CellLabel::Unresolved;
}

// Everything a cell needs besides its coordinates, built once per render.
class CellEvaluator {
 public:
  explicit CellEvaluator(const PlaneSpec& spec) : spec_(spec) {
    spec_.validate();
    if (spec_.kind == PlaneKind::DynamicalCH) {
      map_.emplace(chebyshev_halley_cubic(spec_.a));
    } else if (spec_.kind == PlaneKind::DynamicalMcMullen) {
      const McMullenParams params{spec_.n, spec_.d, spec_.lambda};
      map_.emplace(mcmullen_map(params));
      radius_ = escape_radius(params);
    }
  }

  CellResult operator()(int i, int j) const {
    const Complex p = spec_.pixel_center(i, j);
    switch (spec_.kind) {
      case PlaneKind::DynamicalCH: return root_basin(p);
      case PlaneKind::DynamicalMcMullen: return escape_time(p);
      case PlaneKind::ParameterCH: return ch_parameter(p);
      case PlaneKind::ParameterMcMullen: return mcmullen_parameter(p);
    }
    return {};
  }

 private:
  CellResult root_basin(Complex p) const {
    ExtendedComplex z{p};
    for (int k = 0; k <= spec_.max_iter; ++k) {
      if (const auto r = captured_root(z)) {
        ExtendedComplex w = z;
        bool held = true;
        for (int s = 0; s < kConfirmSteps && held; ++s) {
          w = (*map_)(w);
          held = captured_root(w) == r;
        }
        if (held) return {root_label(*r), k};
      }
      z = (*map_)(z);
    }
    return {CellLabel::Unresolved, spec_.max_iter};
  }

  CellResult escape_time(Complex p) const {
    ExtendedComplex z{p};
    for (int k = 1; k <= spec_.max_iter; ++k) {
      z = (*map_)(z);
      if (z.modulus() > radius_) return {CellLabel::Escaped, k};
    }
    return {CellLabel::Unresolved, spec_.max_iter};
  }

  static int report_iter(const TrichotomyReport& report) {
    if (report.m) return *report.m;
    return report.evidence.events.empty() ? report.max_iter : report.evidence.events.back().index;
  }

  CellResult ch_parameter(Complex a) const {
    try {
      const auto report = classify_ra(a, spec_.max_iter);
      return {class_label(report.cls), report_iter(report)};
    } catch (const DomainError&) {
      return {CellLabel::Degenerate, 0};
    }
  }

  CellResult mcmullen_parameter(Complex lambda) const {
    try {
      const auto report = classify_mcmullen({spec_.n, spec_.d, lambda}, spec_.max_iter);
      return {class_label(report.cls), report_iter(report)};
    } catch (const DomainError&) {
      return {CellLabel::Degenerate, 0};
    }
  }

  PlaneSpec spec_;
  std::optional<RationalMap> map_;
  double radius_ = 0.0;
};

PlaneGrid render_rows(const PlaneSpec& spec, unsigned workers) {
  const CellEvaluator eval(spec);
  PlaneGrid grid{spec, std::vector<CellResult>(static_cast<std::size_t>(spec.nx) * spec.ny)};

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(spec.ny));

  std::atomic<int> next_row{0};
  auto work = [&] {
    for (int j = next_row++; j < spec.ny; j = next_row++)
      for (int i = 0; i < spec.nx; ++i) grid.cells[static_cast<std::size_t>(j) * spec.nx + i] = eval(i, j);
  };
  if (workers <= 1) {
    work();
    return grid;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();  // joins
  return grid;
}

}  // namespace

CellResult compute_cell(const PlaneSpec& spec, int i, int j) { return CellEvaluator(spec)(i, j); }

PlaneGrid render_dynamical_plane(const PlaneSpec& spec, unsigned workers) {
  if (!is_dynamical(spec.kind)) throw DomainError(ErrorKind::InvalidArgument, "render_dynamical_plane needs a dynamical kind");
  return render_rows(spec, workers);
}

PlaneGrid render_parameter_plane(const PlaneSpec& spec, unsigned workers) {
  if (is_dynamical(spec.kind)) throw DomainError(ErrorKind::InvalidArgument, "render_parameter_plane needs a parameter kind");
  return render_rows(spec, workers);
}

PlaneGrid render_plane(const PlaneSpec& spec, unsigned workers) { return render_rows(spec, workers); }

}  // namespace chdyn
