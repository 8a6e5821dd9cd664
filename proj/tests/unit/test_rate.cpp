#include <doctest.h>

#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "smcov/montecarlo.hpp"
#include "smcov/rate.hpp"

using namespace smcov;

namespace {

const CoverageFn kExponential = [](double z) { return std::exp(-z); };

}  // namespace

TEST_CASE("ergodic rate of an exponential SINR") {
  // E[ln(1 + X)] = e E1(1) for X ~ Exp(1).
  const double expected = std::exp(1.0) * boost::math::expint(1, 1.0) / std::numbers::ln2;
  CHECK(ergodic_rate(kExponential) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(ergodic_rate([](double) { return 0.0; }) == 0.0);
  CHECK_THROWS_AS(ergodic_rate([](double) { return 1.0; }), RateError);
}

TEST_CASE("quantiles of an exponential SINR") {
  for (double q : {0.05, 0.5, 0.8})
    for (int n_t : {1, 3}) {
      const double per_stream = std::log2(1.0 - std::log1p(-q));
      CHECK(rate_quantile(Scheme::kSpatialMultiplexing, kExponential, n_t, q) ==
            doctest::Approx(n_t * per_stream).epsilon(1e-6));
      CHECK(rate_quantile(Scheme::kSpatialMultiplexing, kExponential, n_t, q, RateScaling::kPerStream) ==
            doctest::Approx(per_stream).epsilon(1e-6));
      CHECK(rate_quantile(Scheme::kSingleStream, kExponential, n_t, q) ==
            doctest::Approx(per_stream).epsilon(1e-6));
    }
  CHECK_THROWS_AS(rate_quantile(Scheme::kSingleStream, [](double) { return 1.0; }, 1, 0.5), RateError);
  CHECK_THROWS_AS(rate_quantile(Scheme::kSingleStream, kExponential, 1, 1.0), std::invalid_argument);
}

TEST_CASE("schemes coincide for a single stream") {
  const NetworkConfig c{1.0, 4.0, 0.0, 1, 4};
  for (const Receiver& rx : {Receiver{MmseReceiver{}}, Receiver{PzfReceiver{2}}}) {
    const RateProfile sm = rate_profile(Scheme::kSpatialMultiplexing, c, rx);
    const RateProfile sst = rate_profile(Scheme::kSingleStream, c, rx);
    CHECK(sm.mean_rate == sst.mean_rate);
    CHECK(sm.q05 == sst.q05);
    CHECK(sm.q80 == sst.q80);
  }
}

TEST_CASE("single-stream rate ignores N_t") {
  const Receiver rx = MmseReceiver{};
  CHECK(mean_sum_rate(Scheme::kSingleStream, {1.0, 4.0, 0.0, 3, 4}, rx) ==
        mean_sum_rate(Scheme::kSingleStream, {1.0, 4.0, 0.0, 1, 4}, rx));
}

TEST_CASE("MMSE sum rate peaks at three streams for four receive antennas") {
  std::vector<double> rates;
  for (int n_t = 1; n_t <= 8; ++n_t)
    rates.push_back(mean_sum_rate(Scheme::kSpatialMultiplexing, {1.0, 4.0, 0.0, n_t, 4}, MmseReceiver{}));
  const auto best = std::max_element(rates.begin(), rates.end()) - rates.begin() + 1;
  CHECK(best == 3);
  CHECK(rates[0] == doctest::Approx(4.8659).epsilon(1e-4 / 4.8659));
  CHECK(rates[2] == doctest::Approx(6.6364).epsilon(1e-4 / 6.6364));
}

TEST_CASE("rate profile fields") {
  const RateProfile p = rate_profile(Scheme::kSpatialMultiplexing, {1.0, 4.0, 0.0, 1, 4}, PzfReceiver{2});
  CHECK(p.receiver == "pzf(m=2,delta=2)");
  CHECK(p.q05 < p.mean_rate);
  CHECK(p.mean_rate < p.q80);
  CHECK(p.mean_rate == doctest::Approx(4.269180).epsilon(1e-6 / 4.27));
  CHECK(to_string(p.scheme) == "sm");
  CHECK(to_string(Scheme::kSingleStream) == "sst");
}

TEST_CASE("plotted sum rates") {
  CHECK(mean_sum_rate(Scheme::kSpatialMultiplexing, {1.0, 4.0, 0.0, 2, 4}, MmseReceiver{}) ==
        doctest::Approx(6.24126).epsilon(1e-5 / 6.24));
  // The PZF curve is drawn about 1% below the exact value; see the README.
  CHECK(mean_sum_rate(Scheme::kSpatialMultiplexing, {1.0, 4.0, 0.0, 3, 4}, PzfReceiver{}) ==
        doctest::Approx(5.572716).epsilon(0.015));
}

TEST_CASE("cell-edge rate versus the number of streams") {
  for (int n_r : {4, 6}) {
    double prev = std::numeric_limits<double>::infinity();
    double lo = prev;
    double hi = 0.0;
    for (int n_t = 1; n_t <= n_r; ++n_t) {
      const NetworkConfig c{1.0, 4.0, 0.0, n_t, n_r};
      // Cell-edge rate with m chosen to maximize it.
      double q = 0.0;
      for (int m = 1; m * n_t <= n_r; ++m)
        q = std::max(q, rate_quantile(Scheme::kSpatialMultiplexing, coverage_function(c, PzfReceiver{m}), n_t, 0.05));
      CHECK(q < prev);
      prev = q;
      const double m = rate_quantile(Scheme::kSpatialMultiplexing, coverage_function(c, MmseReceiver{}), n_t, 0.05);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    CHECK((hi - lo) / hi < 0.35);
  }
}

TEST_CASE("ergodic rate against the simulated mean") {
  const NetworkConfig c{1.0, 4.0, 0.0, 1, 4};
  const McEstimate mc = estimate_rate({c, PzfReceiver{2}, 100000, 4242});
  const double exact = ergodic_rate(coverage_function(c, PzfReceiver{2}));
  CHECK(std::abs(mc.mean - exact) < 3.0 * mc.std_error);
}
