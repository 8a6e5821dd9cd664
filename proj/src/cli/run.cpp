#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "smcov/cli.hpp"

#ifndef SMCOV_VERSION
#define SMCOV_VERSION "unknown"
#endif

namespace smcov::cli {

namespace {

void add_options(CLI::App& app, Settings& s) {
  app.set_config("--config", "", "Key-value file (key=value per line); flags override it");
  app.add_option("--rx", s.rx, "Receiver: pzf or mmse")->capture_default_str();
  app.add_option("--nt", s.n_t, "Streams per base station")->capture_default_str();
  app.add_option("--nr", s.n_r, "Receive antennas")->capture_default_str();
  app.add_option("--m", s.m, "PZF: base stations cancelled, serving included (default: optimal)");
  app.add_option("--alpha", s.alpha, "Path-loss exponent")->capture_default_str();
  app.add_option("--lambda", s.lambda, "Base-station density")->capture_default_str();
  app.add_option("--sigma2", s.sigma2, "Noise power")->capture_default_str();
  app.add_option("--zdb", s.zdb, "Thresholds in dB: start:stop:step (inclusive) or a,b,c")->capture_default_str();
  app.add_flag("--mc", s.mc, "coverage: add Monte Carlo rows");
  app.add_option("--trials", s.trials, "Monte Carlo trials")->capture_default_str();
  app.add_option("--seed", s.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--threads", s.threads, "Worker threads, 0 = OpenMP default")->capture_default_str();
  app.add_option("--window-factor", s.window_factor, "Simulation radius in units of 1/sqrt(lambda pi)")
      ->capture_default_str();
  app.add_option("--scheme", s.scheme, "rate: sm or sst")->capture_default_str();
  app.add_option("--quantiles", s.quantiles, "rate: extra quantiles, e.g. 0.1,0.5");
  app.add_flag("--per-stream", s.per_stream, "rate: SM quantiles of log2(1+SINR) instead of N_t log2(1+SINR)");
  app.add_option("--format", s.format, "rate: csv or json")->capture_default_str();
  app.add_option("--nt-list", s.nt_list, "rate, optimal-m: sweep over N_t");
  app.add_option("--nr-list", s.nr_list, "optimal-m: sweep over N_r");
  app.add_option("--alpha-list", s.alpha_list, "optimal-m: sweep over alpha");
  app.add_option("--sigma2-list", s.sigma2_list, "optimal-m: sweep over sigma2");
  app.add_option("--out", s.out, "Output path, - for stdout")->capture_default_str();
  app.add_option("--manifest", s.manifest, "Manifest path (default: <out>.manifest.json)");
}

int dispatch(const Settings& s, std::ostream& out) {
  if (s.command == "coverage") return cmd_coverage(s, out);
  if (s.command == "rate") return cmd_rate(s, out);
  if (s.command == "optimal-m") return cmd_optimal_m(s, out);
  if (s.command == "validate") return cmd_validate(s, out);
  throw std::invalid_argument("unknown command " + s.command);
}

bool uses_seed(const Settings& s) { return s.command == "validate" || (s.command == "coverage" && s.mc); }

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Coverage and rate of PZF and MMSE receivers in Poisson cellular networks", "smcov"};
  Settings s;
  add_options(app, s);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"coverage", "Coverage probability versus threshold (CSV)"},
           {"rate", "Mean sum rate and rate quantiles (CSV or JSON)"},
           {"optimal-m", "Optimal number of cancelled base stations with an argmin cross-check"},
           {"validate", "Analytic coverage against Monte Carlo with z-scores"}})
    app.add_subcommand(name, help)->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidConfig;
  }
  s.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream buffer;
  int code = kOk;
  try {
    code = dispatch(s, buffer);
  } catch (const std::logic_error& e) {
    std::cerr << "smcov: invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "smcov: numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }
  const std::string text = buffer.str();

  RunManifest manifest;
  manifest.command = s.command;
  manifest.parameters = settings_json(s);
  manifest.version = SMCOV_VERSION;
  if (uses_seed(s)) manifest.seeds.push_back(s.seed);
  manifest.outputs.push_back({s.out, sha256_hex(text)});

  if (s.out == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) return kIoFailure;
  } else {
    std::ofstream f(s.out, std::ios::binary);
    f << text;
    if (!f.flush()) {
      std::cerr << "smcov: cannot write " << s.out << "\n";
      return kIoFailure;
    }
  }

  const std::string manifest_path = !s.manifest.empty() ? s.manifest : (s.out == "-" ? "" : s.out + ".manifest.json");
  if (!manifest_path.empty()) {
    manifest.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ofstream f(manifest_path, std::ios::binary);
    f << to_json(manifest).dump(2) << "\n";
    if (!f.flush()) {
      std::cerr << "smcov: cannot write " << manifest_path << "\n";
      return kIoFailure;
    }
  }
  return code;
}

}  // namespace smcov::cli
