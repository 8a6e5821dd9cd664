#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "smcov/geometry.hpp"
#include "smcov/receiver.hpp"

namespace smcov {

using Engine = std::mt19937_64;

// Independent stream for trial `index` under `seed`.
Engine trial_engine(std::uint64_t seed, std::uint64_t index);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct NetworkRealization {
  int n_t = 1;
  int n_r = 1;
  std::vector<Point2> bs_positions;  // sorted by distance from the origin
  std::vector<double> distances;
  Eigen::MatrixXcd channels;  // n_r x (count * n_t); columns [b n_t, (b+1) n_t) belong to BS b

  int count() const { return static_cast<int>(distances.size()); }
  double serving_distance() const { return distances.front(); }
  Eigen::VectorXcd column(int bs, int stream) const { return channels.col(bs * n_t + stream); }
};

class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultWindowFactor = 40.0;

// window_factor / sqrt(lambda pi).
double window_radius(double lambda, double window_factor = kDefaultWindowFactor);

// PPP in the disk of the given radius with CN(0, 1) channel entries.
// Resamples until at least one base station falls in the window.
NetworkRealization sample_network(const NetworkConfig& config, double window_radius, Engine& engine);
NetworkRealization sample_network(const NetworkConfig& config, double window_radius, std::uint64_t seed);

// Unit vector orthogonal to the other own-cell streams and to every stream of
// the m - 1 nearest interferers, aligned with the projection of h_{0,k}.
Eigen::VectorXcd pzf_filter(const NetworkRealization& net, const PzfSplit& split, int stream);

double pzf_sinr(const NetworkRealization& net, const NetworkConfig& config, const PzfSplit& split,
                int stream);

// h^H R^{-1} h with R the interference-plus-noise covariance, normalized by the
// serving path loss. Throws ConditioningError when cond(R) > 1e12.
double mmse_sinr(const NetworkRealization& net, const NetworkConfig& config, int stream);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SimulationRequest {
  NetworkConfig config;
  Receiver receiver;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  double window_factor = kDefaultWindowFactor;
  // PZF only: draw every interferer channel instead of the exponential
  // post-filter gains they induce.
  bool explicit_channels = false;
};

struct SinrSamples {
  std::vector<double> sinr;      // indexed by trial
  std::int64_t resampled = 0;    // draws discarded as degenerate
  std::int64_t regularized = 0;  // MMSE trials that needed the diagonal floor
};

// One SINR draw for trial `index`.
double simulate_trial(const SimulationRequest& request, std::uint64_t index, int* resampled = nullptr,
                      int* regularized = nullptr);

// threads <= 0 uses the OpenMP default. The output does not depend on threads.
SinrSamples simulate_sinr(const SimulationRequest& request, int threads = 0);
SinrSamples simulate_sinr_serial(const SimulationRequest& request);

McEstimate coverage_from_samples(const SinrSamples& samples, double z, std::uint64_t seed);
McEstimate rate_from_samples(const SinrSamples& samples, std::uint64_t seed);

McEstimate estimate_coverage(const SimulationRequest& request, double z, int threads = 0);
McEstimate estimate_rate(const SimulationRequest& request, int threads = 0);

}  // namespace smcov
