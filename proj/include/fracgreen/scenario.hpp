#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracgreen/report.hpp"

namespace fracgreen {

/// Configuration or usage error with a field-level diagnostic.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind {
  bsym_check,
  jump_table,
  power_contour,
  geometry,
  greens_fraclap,
  greens_drift,
};

struct Scenario {
  ScenarioKind kind;
  std::string name;
  nlohmann::json params;  // kind-specific, validated against an allowlist
  std::uint64_t seed = 1;
};

ScenarioKind parse_kind(const std::string& s);
std::string kind_name(ScenarioKind k);

/// Parse and validate a config document: {"scenarios": [{...}, ...]}.
/// Unknown keys are rejected with a field diagnostic.
std::vector<Scenario> parse_config(const std::string& text);

struct RunOptions {
  int jobs = 1;
  std::optional<std::uint64_t> seed_override;
};

/// Execute one scenario; numerical rejections from the modules are recorded
/// as failing checks rather than aborting the run.
RunReport run_scenario(const Scenario& sc, const RunOptions& opts);

std::vector<RunReport> run_all(const std::vector<Scenario>& scenarios,
                               const RunOptions& opts,
                               std::ostream* progress = nullptr);

/// Built-in scenario library. Currently ships "acceptance", the full
/// verification suite; the same document is mirrored at suites/acceptance.json.
const std::string& builtin_suite(const std::string& name);

}  // namespace fracgreen
