#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "chdyn/plane.hpp"

namespace chdyn {

using Rgb = std::array<std::uint8_t, 3>;

// Fixed palette. Root/escape cells are darkened with the iteration count by
// f = max(1/4, 1 - k/max_iter), channel -> floor(channel f + 0.5).
Rgb cell_color(const CellResult& cell, int max_iter) noexcept;

// Binary P6, maxval 255, rows from the top.
std::string encode_ppm(const PlaneGrid& grid);
void write_ppm(const PlaneGrid& grid, const std::filesystem::path& path);

// "i,j,re,im,class,iter", one row per pixel in row-major order.
std::string encode_csv(const PlaneGrid& grid);
void write_csv(const PlaneGrid& grid, const std::filesystem::path& path);

// Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace chdyn
