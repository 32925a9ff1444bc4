#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "chdyn/complex.hpp"

namespace chdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIoOrUsage = 1;
inline constexpr int kExitDomain = 2;

// "re,im" or "re".
std::optional<Complex> parse_complex(std::string_view text);
// "NXxNY".
std::optional<std::pair<int, int>> parse_resolution(std::string_view text);

// Entry point of the chdyn tool; documents go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chdyn::cli
