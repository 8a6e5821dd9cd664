#include "smcov/receiver.hpp"

#include "smcov/mmse.hpp"
#include "smcov/pzf.hpp"

namespace smcov {

PzfSplit resolve_split(const NetworkConfig& config, const PzfReceiver& rx) {
  config.validate();
  if (rx.m) return PzfSplit::from(config, *rx.m);
  if (config.n_r == config.n_t) return PzfSplit::from(config, 1);
  return PzfSplit::from(config, optimal_m(config));
}

std::function<double(double)> coverage_function(const NetworkConfig& config, const Receiver& rx) {
  config.validate();
  if (const auto* pzf = std::get_if<PzfReceiver>(&rx)) {
    const PzfSplit split = resolve_split(config, *pzf);
    if (config.sigma2 == 0.0)
      return [config, split](double z) {
        return coverage_pzf_interflimited(config.n_t, config.n_r, split.m, split.delta, config.alpha, z);
      };
    return [config, split](double z) { return coverage_pzf({config, split, z}); };
  }
  if (config.sigma2 == 0.0)
    return [config](double z) { return coverage_mmse_interflimited(config.n_t, config.n_r, config.alpha, z); };
  return [config](double z) { return coverage_mmse({config, z}); };
}

double coverage(const NetworkConfig& config, const Receiver& rx, double z) {
  return coverage_function(config, rx)(z);
}

std::string describe(const NetworkConfig& config, const Receiver& rx) {
  if (const auto* pzf = std::get_if<PzfReceiver>(&rx)) {
    const PzfSplit s = resolve_split(config, *pzf);
    return "pzf(m=" + std::to_string(s.m) + ",delta=" + std::to_string(s.delta) + ")";
  }
  return "mmse";
}

}  // namespace smcov
