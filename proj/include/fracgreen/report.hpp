#pragma once

#include <span>
#include <string>
#include <vector>

namespace fracgreen {

struct CheckRecord {
  std::string scenario;
  std::string check;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double error_estimate = 0.0;
  double runtime_ms = 0.0;
};

/// pass field set from |computed - reference| <= tolerance.
CheckRecord make_check(std::string scenario, std::string check, double computed,
                       double reference, double tolerance,
                       double error_estimate = 0.0, double runtime_ms = 0.0);

struct RunReport {
  std::string scenario;
  std::vector<CheckRecord> checks;
  double runtime_ms = 0.0;
  bool passed() const;
};

/// Doubles are rendered with 17 significant digits so that reports are
/// byte-stable across runs; timings are zeroed unless requested (they are the
/// only nondeterministic field).
std::string format_g17(double v);
std::string to_json_lines(std::span<const RunReport> reports,
                          bool include_timings);
std::string to_csv(std::span<const RunReport> reports, bool include_timings);

}  // namespace fracgreen
