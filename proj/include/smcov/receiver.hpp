#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "smcov/geometry.hpp"

namespace smcov {

// m unset means the split chosen by optimal_m, or m = 1 when n_r = n_t.
struct PzfReceiver {
  std::optional<int> m;
};
struct MmseReceiver {};
using Receiver = std::variant<PzfReceiver, MmseReceiver>;

PzfSplit resolve_split(const NetworkConfig& config, const PzfReceiver& rx);

// Analytic P[SINR > z]; uses the interference-limited closed forms when sigma2 = 0.
double coverage(const NetworkConfig& config, const Receiver& rx, double z);

// z -> coverage(config, rx, z) with the split resolved once.
std::function<double(double)> coverage_function(const NetworkConfig& config, const Receiver& rx);

// "pzf(m=2,delta=2)" or "mmse".
std::string describe(const NetworkConfig& config, const Receiver& rx);

}  // namespace smcov
