#include "fracgreen/report.hpp"

#include <cmath>
#include <cstdio>

namespace fracgreen {

CheckRecord make_check(std::string scenario, std::string check, double computed,
                       double reference, double tolerance,
                       double error_estimate, double runtime_ms) {
  CheckRecord rec;
  rec.scenario = std::move(scenario);
  rec.check = std::move(check);
  rec.computed = computed;
  rec.reference = reference;
  rec.tolerance = tolerance;
  rec.pass = std::isfinite(computed) &&
             std::abs(computed - reference) <= tolerance;
  rec.error_estimate = error_estimate;
  rec.runtime_ms = runtime_ms;
  return rec;
}

bool RunReport::passed() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string escape_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_json_lines(std::span<const RunReport> reports,
                          bool include_timings) {
  std::string out;
  for (const RunReport& rep : reports) {
    for (const CheckRecord& c : rep.checks) {
      out += "{\"scenario\":\"" + escape_json(c.scenario) + "\"";
      out += ",\"check\":\"" + escape_json(c.check) + "\"";
      out += ",\"computed\":" + format_g17(c.computed);
      out += ",\"reference\":" + format_g17(c.reference);
      out += ",\"tolerance\":" + format_g17(c.tolerance);
      out += std::string(",\"pass\":") + (c.pass ? "true" : "false");
      out += ",\"error_estimate\":" + format_g17(c.error_estimate);
      out += ",\"runtime_ms\":" +
             format_g17(include_timings ? c.runtime_ms : 0.0);
      out += "}\n";
    }
  }
  return out;
}

std::string to_csv(std::span<const RunReport> reports, bool include_timings) {
  std::string out =
      "scenario,check,computed,reference,tolerance,pass,error_estimate,"
      "runtime_ms\n";
  for (const RunReport& rep : reports) {
    for (const CheckRecord& c : rep.checks) {
      out += escape_csv(c.scenario) + "," + escape_csv(c.check) + "," +
             format_g17(c.computed) + "," + format_g17(c.reference) + "," +
             format_g17(c.tolerance) + "," + (c.pass ? "true" : "false") +
             "," + format_g17(c.error_estimate) + "," +
             format_g17(include_timings ? c.runtime_ms : 0.0) + "\n";
    }
  }
  return out;
}

}  // namespace fracgreen
