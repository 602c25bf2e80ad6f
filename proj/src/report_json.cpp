#include "qgauss/report_json.hpp"

#include <cmath>
#include <string>

namespace qgauss {

namespace {

// JSON has no Infinity/NaN; those become null.
nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

nlohmann::json to_json(const CheckResult& check) {
  return {
      {"name", check.name},
      {"lhs", number(check.lhs)},
      {"rhs", number(check.rhs)},
      {"abs_error", number(check.abs_error)},
      {"tolerance", number(check.tolerance)},
      {"passed", check.passed},
      {"gated", check.gated},
      {"notes", check.notes},
  };
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {
      {"checks", std::move(checks)},
      {"summary",
       {{"total", report.total},
        {"passed", report.passed},
        {"failed", report.failed},
        {"informational_failed", report.informational_failed}}},
  };
}

nlohmann::json to_json(const SamplerReport& report, bool with_timing) {
  nlohmann::json j = {
      {"q", report.q},
      {"method", std::string(to_string(report.method))},
      {"n", report.samples.size()},
      {"seed", report.seed},
      {"first_stream", report.first_stream},
      {"lanes", report.lanes},
      {"draws_attempted", report.draws_attempted},
      {"acceptance_rate", number(report.acceptance_rate)},
      {"rejection_bound", number(report.rejection_bound)},
      {"expected_acceptance", number(report.expected_acceptance)},
      {"generator", report.generator},
      {"note", report.note},
  };
  if (with_timing) j["elapsed_seconds"] = report.elapsed.count();
  return j;
}

nlohmann::json error_json(std::string_view kind, std::string_view message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

}  // namespace qgauss
