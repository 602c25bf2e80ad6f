#pragma once

// JSON documents emitted by the command-line tool. Their schemas live in
// schemas/ at the repository root.

#include <string_view>

#include <json.hpp>

#include "qgauss/error.hpp"
#include "qgauss/sampler.hpp"
#include "qgauss/validation.hpp"

namespace qgauss {

nlohmann::json to_json(const CheckResult& check);

/// {"checks": [...], "summary": {"total", "passed", "failed",
/// "informational_failed"}}
nlohmann::json to_json(const SuiteReport& report);

/// Sampler metadata without the samples themselves. `elapsed_seconds` is
/// included only when `with_timing` is set, so default output is
/// reproducible byte for byte.
nlohmann::json to_json(const SamplerReport& report, bool with_timing);

/// {"error": {"kind": ..., "message": ...}}
nlohmann::json error_json(std::string_view kind, std::string_view message);

}  // namespace qgauss
