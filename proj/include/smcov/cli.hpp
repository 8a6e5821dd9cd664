#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace smcov::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kInvalidConfig = 2,
  kNumericFailure = 3,
  kIoFailure = 4,
};

struct Settings {
  std::string command;
  std::string rx = "pzf";
  int n_t = 1;
  int n_r = 1;
  std::optional<int> m;
  double alpha = 4.0;
  double lambda = 1.0;
  double sigma2 = 0.0;
  std::string zdb = "-5:20:1";
  bool mc = false;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  int threads = 0;
  double window_factor = 40.0;
  std::string scheme = "sm";
  std::string quantiles;
  bool per_stream = false;
  std::string format = "csv";
  std::string nt_list;
  std::string nr_list;
  std::string alpha_list;
  std::string sigma2_list;
  std::string out = "-";
  std::string manifest;
};

// "a:b:step" (inclusive) or "x,y,z". An empty string gives an empty list.
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

// Command bodies. Each writes its table to `out` and returns an exit code.
int cmd_coverage(const Settings& s, std::ostream& out);
int cmd_rate(const Settings& s, std::ostream& out);
int cmd_optimal_m(const Settings& s, std::ostream& out);
int cmd_validate(const Settings& s, std::ostream& out);

struct OutputRecord {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  nlohmann::json parameters;
  std::string version;
  std::vector<std::uint64_t> seeds;
  double wall_time_seconds = 0.0;
  std::vector<OutputRecord> outputs;
};

nlohmann::json to_json(const RunManifest& manifest);
nlohmann::json settings_json(const Settings& s);
std::string sha256_hex(const std::string& bytes);

// Full entry point: parse, dispatch, write output and manifest.
int run(int argc, const char* const* argv);

}  // namespace smcov::cli
