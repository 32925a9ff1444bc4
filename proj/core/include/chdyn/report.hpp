#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "chdyn/lemmas.hpp"
#include "chdyn/special_params.hpp"
#include "chdyn/trichotomy.hpp"

namespace chdyn {

inline constexpr std::string_view kEngineVersion = "0.1.0";

// JSON documents with the fixed top-level key order
//   kind, params, class | value, m | residual, events, thresholds, engine_version
// and every float at 17 significant digits. Identical inputs give identical bytes.
std::string to_json(const TrichotomyReport& report);
std::string to_json(const SpecialParamResult& result);
std::string to_json(const LemmaCheckResult& result);

// Throws IoError.
void write_report(const TrichotomyReport& report, const std::filesystem::path& path);
void write_report(const SpecialParamResult& result, const std::filesystem::path& path);
void write_report(const LemmaCheckResult& result, const std::filesystem::path& path);

}  // namespace chdyn
