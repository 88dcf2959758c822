#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildram/codec.hpp"

namespace wildram {

using Json = nlohmann::json;

struct Task {
  std::string name;
  Json params;  // the task record as given
};

struct JobConfig {
  Field field;
  int artin_order = 2;
  Character character;
  int precision = 0;  // 0 selects per-task defaults
  std::uint64_t seed = 0;
  std::vector<Task> tasks;
};

/// Throws ConfigInvalid (message starts with a JSON pointer) or UnknownTask.
JobConfig parse_config(const Json& j);

inline constexpr const char* kReportSchema = "wildram.report/1";
inline constexpr const char* kSelftestSchema = "wildram.selftest/1";

/// Report keyed by task name (a repeated name gets a "#n" suffix). Errors
/// inside a task mark that task failed and the run continues.
Json run_job(const JobConfig& cfg, bool parallel = false);
bool report_ok(const Json& report);

/// Removes every member named "timing", recursively.
Json strip_timing(const Json& j);
/// JSON patch from golden to report, timing excluded. Throws GoldenMissing.
Json compare_golden(const Json& report, const std::string& golden_path);

/// Canonical text: two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace wildram
