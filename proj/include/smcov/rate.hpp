#pragma once

#include <functional>
#include <string>

#include "smcov/geometry.hpp"
#include "smcov/quadrature.hpp"
#include "smcov/receiver.hpp"

namespace smcov {

using CoverageFn = std::function<double(double)>;

enum class Scheme { kSpatialMultiplexing, kSingleStream };

// How a per-user rate is read off the SINR in spatial multiplexing.
// kAggregate: N_t log2(1 + SINR). kPerStream: log2(1 + SINR).
// Single-stream transmission always uses log2(1 + SINR).
enum class RateScaling { kAggregate, kPerStream };

struct RateTruncation {
  double ccdf_floor = 1e-8;  // integrate t up to the first T with CCDF(2^T - 1) < floor
  double max_t = 1024.0;
  QuadratureOptions quad{1e-10, 1e-10};
};

class RateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// E[log2(1 + SINR)] as the integral of P[SINR > 2^t - 1] over t >= 0.
double ergodic_rate(const CoverageFn& coverage_fn, const RateTruncation& policy = {});

// Smallest c with P(rate <= c) >= q, to 1e-6 bits/s/Hz.
double rate_quantile(Scheme scheme, const CoverageFn& coverage_fn, int n_t, double q,
                     RateScaling scaling = RateScaling::kAggregate);

// SM: N_t * C(N_t, N_r). SST: C(1, N_r).
double mean_sum_rate(Scheme scheme, const NetworkConfig& config, const Receiver& rx);

struct RateProfile {
  double mean_rate = 0.0;
  double q05 = 0.0;
  double q80 = 0.0;
  Scheme scheme = Scheme::kSpatialMultiplexing;
  std::string receiver;
};

// Mean sum rate with the 5% and 80% points of the per-user rate CDF.
RateProfile rate_profile(Scheme scheme, const NetworkConfig& config, const Receiver& rx,
                         RateScaling scaling = RateScaling::kAggregate);

std::string to_string(Scheme scheme);

}  // namespace smcov
