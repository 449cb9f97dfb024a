#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracgreen/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fracgreen::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fracgreen: boundary symbols of fractional elliptic powers and "
      "numerical Green-identity verification"};
  app.require_subcommand(1);

  std::string config_path;
  std::string suite;
  std::string format = "json-lines";
  std::string out_dir;
  std::uint64_t seed = 0;
  bool has_seed = false;
  int jobs = 1;
  bool timings = false;

  CLI::App* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("config", config_path, "path to a JSON scenario config");
  run->add_option("--suite", suite, "built-in suite name (acceptance)");
  run->add_option("--format", format, "output format: json-lines or csv")
      ->check(CLI::IsMember({"json-lines", "csv"}));
  run->add_option("--out", out_dir, "directory for report files");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "override every scenario seed");
  run->add_option("--jobs", jobs, "intra-scenario worker threads")
      ->check(CLI::PositiveNumber);
  run->add_flag("--timings", timings,
                "include real runtimes in emitted reports (off by default so "
                "reports are byte-stable)");

  CLI11_PARSE(app, argc, argv);
  has_seed = seed_opt->count() > 0;

  try {
    std::string text;
    if (!suite.empty()) {
      text = fracgreen::builtin_suite(suite);
    } else if (!config_path.empty()) {
      text = read_file(config_path);
    } else {
      std::cerr << "error: provide a config path or --suite\n";
      return 2;
    }

    std::vector<fracgreen::Scenario> scenarios = fracgreen::parse_config(text);
    fracgreen::RunOptions opts;
    opts.jobs = jobs;
    if (has_seed) opts.seed_override = seed;

    std::vector<fracgreen::RunReport> reports =
        fracgreen::run_all(scenarios, opts, &std::cerr);

    std::string rendered = (format == "csv")
                               ? fracgreen::to_csv(reports, timings)
                               : fracgreen::to_json_lines(reports, timings);
    if (out_dir.empty()) {
      std::cout << rendered;
    } else {
      std::filesystem::create_directories(out_dir);
      std::string file = out_dir + "/report." +
                         (format == "csv" ? std::string("csv")
                                          : std::string("jsonl"));
      std::ofstream out(file, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << file << "'\n";
        return 1;
      }
      out << rendered;
      if (!out.good()) {
        std::cerr << "error: write failed for '" << file << "'\n";
        return 1;
      }
      std::cerr << "report written to " << file << "\n";
    }

    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep.passed();
    return all_pass ? 0 : 1;
  } catch (const fracgreen::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
