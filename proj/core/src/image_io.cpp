#include "chdyn/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "chdyn/errors.hpp"

namespace chdyn {

namespace {

constexpr Rgb kRootColors[3] = {{220, 50, 50}, {50, 220, 50}, {50, 50, 220}};
constexpr Rgb kCantor{200, 40, 40};
constexpr Rgb kCantorCircles{66, 135, 245};
constexpr Rgb kSierpinski{245, 188, 66};
constexpr Rgb kBlack{0, 0, 0};

Rgb shade(Rgb base, int k, int max_iter) noexcept {
  const double f = max_iter > 0 ? std::max(0.25, 1.0 - static_cast<double>(k) / max_iter) : 1.0;
  Rgb out{};
  for (std::size_t c = 0; c < 3; ++c) out[c] = static_cast<std::uint8_t>(std::floor(base[c] * f + 0.5));
  return out;
}

}  // namespace

Rgb cell_color(const CellResult& cell, int max_iter) noexcept {
  switch (cell.label) {
    case CellLabel::Root0:
    case CellLabel::Root1:
    case CellLabel::Root2: return shade(kRootColors[static_cast<int>(cell.label)], cell.iter, max_iter);
    // Escape to infinity draws like the first root.
    case CellLabel::Escaped: return shade(kRootColors[0], cell.iter, max_iter);
    case CellLabel::Cantor: return kCantor;
    case CellLabel::CantorCircles: return kCantorCircles;
    case CellLabel::Sierpinski: return kSierpinski;
    case CellLabel::Unresolved:
    case CellLabel::Degenerate: return kBlack;
  }
  return kBlack;
}

std::string encode_ppm(const PlaneGrid& grid) {
  std::string out = fmt::format("P6\n{} {}\n255\n", grid.spec.nx, grid.spec.ny);
  out.reserve(out.size() + grid.cells.size() * 3);
  for (const CellResult& cell : grid.cells) {
    const Rgb rgb = cell_color(cell, grid.spec.max_iter);
    out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  }
  return out;
}

std::string encode_csv(const PlaneGrid& grid) {
  std::string out = "i,j,re,im,class,iter\n";
  for (int j = 0; j < grid.spec.ny; ++j) {
    for (int i = 0; i < grid.spec.nx; ++i) {
      const Complex p = grid.spec.pixel_center(i, j);
      const CellResult& cell = grid.at(i, j);
      out += fmt::format("{},{},{:.17g},{:.17g},{},{}\n", i, j, p.real(), p.imag(), to_string(cell.label), cell.iter);
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("write failed for " + path.string());
}

void write_ppm(const PlaneGrid& grid, const std::filesystem::path& path) { write_file(path, encode_ppm(grid)); }

void write_csv(const PlaneGrid& grid, const std::filesystem::path& path) { write_file(path, encode_csv(grid)); }

}  // namespace chdyn
