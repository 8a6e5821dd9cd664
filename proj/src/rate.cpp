#include "smcov/rate.hpp"

#include <cmath>

namespace smcov {

namespace {

double ccdf_at_rate(const CoverageFn& f, double t) { return f(std::exp2(t) - 1.0); }

// The per-stream configuration whose SINR law drives the scheme.
NetworkConfig stream_config(Scheme scheme, const NetworkConfig& config) {
  NetworkConfig c = config;
  if (scheme == Scheme::kSingleStream) c.n_t = 1;
  return c;
}

}  // namespace

double ergodic_rate(const CoverageFn& coverage_fn, const RateTruncation& policy) {
  double t_max = 1.0;
  while (ccdf_at_rate(coverage_fn, t_max) >= policy.ccdf_floor) {
    t_max *= 2.0;
    if (t_max > policy.max_t) throw RateError("ergodic_rate: CCDF does not fall below the truncation floor");
  }
  auto integrand = [&](double t) { return ccdf_at_rate(coverage_fn, t); };
  return integrate(integrand, 0.0, t_max, policy.quad).value;
}

double rate_quantile(Scheme scheme, const CoverageFn& coverage_fn, int n_t, double q, RateScaling scaling) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("rate_quantile: q must lie in (0, 1)");
  if (n_t < 1) throw std::invalid_argument("rate_quantile: n_t must be >= 1");
  const double mult =
      (scheme == Scheme::kSpatialMultiplexing && scaling == RateScaling::kAggregate) ? n_t : 1.0;
  auto cdf = [&](double c) { return 1.0 - coverage_fn(std::exp2(c / mult) - 1.0); };

  double lo = 0.0;
  double hi = 1.0;
  while (cdf(hi) < q) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e4) throw RateError("rate_quantile: CDF saturates below q");
  }
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double mean_sum_rate(Scheme scheme, const NetworkConfig& config, const Receiver& rx) {
  const NetworkConfig c = stream_config(scheme, config);
  const double per_stream = ergodic_rate(coverage_function(c, rx));
  return scheme == Scheme::kSpatialMultiplexing ? c.n_t * per_stream : per_stream;
}

RateProfile rate_profile(Scheme scheme, const NetworkConfig& config, const Receiver& rx, RateScaling scaling) {
  const NetworkConfig c = stream_config(scheme, config);
  const CoverageFn f = coverage_function(c, rx);
  RateProfile out;
  out.scheme = scheme;
  out.receiver = describe(c, rx);
  const double per_stream = ergodic_rate(f);
  out.mean_rate = scheme == Scheme::kSpatialMultiplexing ? c.n_t * per_stream : per_stream;
  out.q05 = rate_quantile(scheme, f, c.n_t, 0.05, scaling);
  out.q80 = rate_quantile(scheme, f, c.n_t, 0.80, scaling);
  return out;
}

std::string to_string(Scheme scheme) { return scheme == Scheme::kSpatialMultiplexing ? "sm" : "sst"; }

}  // namespace smcov
