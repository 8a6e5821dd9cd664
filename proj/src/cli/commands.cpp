#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "smcov/cli.hpp"
#include "smcov/curve.hpp"
#include "smcov/montecarlo.hpp"
#include "smcov/pzf.hpp"
#include "smcov/rate.hpp"
#include "smcov/receiver.hpp"

namespace smcov::cli {

namespace {

NetworkConfig network(const Settings& s) {
  NetworkConfig c{s.lambda, s.alpha, s.sigma2, s.n_t, s.n_r};
  c.validate();
  return c;
}

Receiver receiver(const Settings& s) {
  if (s.rx == "pzf") return PzfReceiver{s.m};
  if (s.rx == "mmse") {
    if (s.m) throw std::invalid_argument("--m applies to the pzf receiver only");
    return MmseReceiver{};
  }
  throw std::invalid_argument("--rx must be pzf or mmse, got '" + s.rx + "'");
}

Scheme scheme(const Settings& s) {
  if (s.scheme == "sm") return Scheme::kSpatialMultiplexing;
  if (s.scheme == "sst") return Scheme::kSingleStream;
  throw std::invalid_argument("--scheme must be sm or sst, got '" + s.scheme + "'");
}

SimulationRequest simulation(const Settings& s) {
  if (s.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  SimulationRequest r;
  r.config = network(s);
  r.receiver = receiver(s);
  r.trials = s.trials;
  r.seed = s.seed;
  r.window_factor = s.window_factor;
  return r;
}

std::string num(double v) { return fmt::format("{:.10g}", v); }

template <class T>
std::vector<T> or_single(const std::vector<T>& list, T fallback) {
  return list.empty() ? std::vector<T>{fallback} : list;
}

}  // namespace

int cmd_coverage(const Settings& s, std::ostream& out) {
  const NetworkConfig config = network(s);
  const Receiver rx = receiver(s);
  const std::vector<double> grid = parse_real_list(s.zdb);
  out << "z_db,z_linear,coverage,method,ci_halfwidth\n";
  if (grid.empty()) return kOk;

  const CoverageCurve curve = coverage_curve(config, rx, grid, s.threads);
  std::optional<SinrSamples> samples;
  if (s.mc) samples = simulate_sinr(simulation(s), s.threads);
  for (const auto& p : curve.points) {
    fmt::print(out, "{},{},{},analytic,\n", num(p.z_db), num(p.z_linear), num(p.coverage));
    if (samples) {
      const McEstimate e = coverage_from_samples(*samples, p.z_linear, s.seed);
      fmt::print(out, "{},{},{},mc,{}\n", num(p.z_db), num(p.z_linear), num(e.mean), num(1.96 * e.std_error));
    }
  }
  return kOk;
}

int cmd_rate(const Settings& s, std::ostream& out) {
  const Scheme sch = scheme(s);
  const Receiver rx = receiver(s);
  const RateScaling scaling = s.per_stream ? RateScaling::kPerStream : RateScaling::kAggregate;
  const std::vector<double> extra = parse_real_list(s.quantiles);
  const std::vector<int> nts = or_single(parse_int_list(s.nt_list), s.n_t);

  struct Row {
    NetworkConfig config;
    RateProfile profile;
    std::vector<double> extra;
  };
  std::vector<Row> rows;
  for (int n_t : nts) {
    Settings t = s;
    t.n_t = n_t;
    const NetworkConfig config = network(t);
    Row row{config, rate_profile(sch, config, rx, scaling), {}};
    NetworkConfig stream = config;
    if (sch == Scheme::kSingleStream) stream.n_t = 1;
    const CoverageFn f = coverage_function(stream, rx);
    for (double q : extra) row.extra.push_back(rate_quantile(sch, f, stream.n_t, q, scaling));
    rows.push_back(std::move(row));
  }

  if (s.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j{{"n_t", r.config.n_t},        {"n_r", r.config.n_r},
                       {"alpha", r.config.alpha},    {"lambda", r.config.lambda},
                       {"sigma2", r.config.sigma2},  {"scheme", to_string(r.profile.scheme)},
                       {"receiver", r.profile.receiver}, {"mean_rate", r.profile.mean_rate},
                       {"q05", r.profile.q05},       {"q80", r.profile.q80},
                       {"quantile_scaling", s.per_stream ? "per_stream" : "aggregate"}};
      nlohmann::json qs = nlohmann::json::object();
      for (std::size_t i = 0; i < extra.size(); ++i) qs[num(extra[i])] = r.extra[i];
      j["quantiles"] = qs;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
    return kOk;
  }
  if (s.format != "csv") throw std::invalid_argument("--format must be csv or json");
  out << "scheme,receiver,n_t,n_r,alpha,lambda,sigma2,mean_rate,q05,q80";
  for (double q : extra) out << ",quantile_" << num(q);
  out << "\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{}", to_string(r.profile.scheme), r.profile.receiver, r.config.n_t,
               r.config.n_r, num(r.config.alpha), num(r.config.lambda), num(r.config.sigma2),
               num(r.profile.mean_rate), num(r.profile.q05), num(r.profile.q80));
    for (double v : r.extra) out << "," << num(v);
    out << "\n";
  }
  return kOk;
}

int cmd_optimal_m(const Settings& s, std::ostream& out) {
  const auto nts = or_single(parse_int_list(s.nt_list), s.n_t);
  const auto nrs = or_single(parse_int_list(s.nr_list), s.n_r);
  const auto alphas = or_single(parse_real_list(s.alpha_list), s.alpha);
  const auto sigmas = or_single(parse_real_list(s.sigma2_list), s.sigma2);
  out << "n_t,n_r,alpha,sigma2,m_star,argmin_m,agrees,status\n";
  for (int n_t : nts)
    for (int n_r : nrs)
      for (double alpha : alphas)
        for (double sigma2 : sigmas) {
          NetworkConfig c{s.lambda, alpha, sigma2, n_t, n_r};
          fmt::print(out, "{},{},{},{},", n_t, n_r, num(alpha), num(sigma2));
          try {
            c.validate();
            const int m = optimal_m(c);
            const auto argmin = argmin_mean_inverse_sinr(c);
            bool agrees = false;
            std::string joined;
            for (int a : argmin) {
              agrees = agrees || a == m;
              joined += (joined.empty() ? "" : ";") + std::to_string(a);
            }
            fmt::print(out, "{},{},{},ok\n", m, joined, agrees ? "yes" : "no");
          } catch (const std::invalid_argument&) {
            out << ",,,infeasible\n";
          }
        }
  return kOk;
}

int cmd_validate(const Settings& s, std::ostream& out) {
  const SimulationRequest request = simulation(s);
  const std::vector<double> grid = parse_real_list(s.zdb);
  const auto f = coverage_function(request.config, request.receiver);
  const SinrSamples samples = simulate_sinr(request, s.threads);
  out << "z_db,z_linear,analytic,mc,std_error,z_score\n";
  bool ok = true;
  for (double db : grid) {
    const double z = db_to_linear(db);
    const double exact = f(z);
    const McEstimate e = coverage_from_samples(samples, z, s.seed);
    // A floor of 1/trials keeps the score finite when every trial agrees.
    const double se = std::max(e.std_error, 1.0 / static_cast<double>(e.trials));
    const double score = (e.mean - exact) / se;
    ok = ok && std::abs(score) <= 4.0;
    fmt::print(out, "{},{},{},{},{},{}\n", num(db), num(z), num(exact), num(e.mean), num(e.std_error), num(score));
  }
  return ok ? kOk : kValidationFailed;
}

}  // namespace smcov::cli
