#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace wildroute::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kIoError = 2,
  kScenarioError = 3,
};

struct CommonOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir;
  std::optional<unsigned long long> seed;
  std::optional<std::string> style;  // "paper" | "default"
};

int cmd_plan(const CommonOptions& opts);
int cmd_simulate(const CommonOptions& opts, bool frames);
int cmd_compare(const CommonOptions& opts);
int cmd_validate_map(const std::filesystem::path& map);

/// Maps the active exception onto an exit code and prints one JSON error line to stderr.
int report_current_exception();

}  // namespace wildroute::cli
