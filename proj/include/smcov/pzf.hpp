#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "smcov/geometry.hpp"
#include "smcov/quadrature.hpp"

namespace smcov {

class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Laplace transform of the residual interference seen beyond distance R.
double laplace_interference(double s, double R, double lambda, int n_t, double alpha);

// order-th derivative in s of laplace_interference, in closed form.
double laplace_interference_derivative(int order, double s, double R, double lambda, int n_t,
                                       double alpha);

struct PzfCoverageRequest {
  NetworkConfig config;
  PzfSplit split;
  double z = 1.0;  // linear SINR threshold
};

struct PzfQuadrature {
  QuadratureOptions outer{1e-10, 1e-10};
  QuadratureOptions inner{1e-11, 1e-11};
};

// P[SINR > z] with noise. The radial integral is evaluated numerically even
// when sigma2 = 0, so this is an independent route to the closed form below.
double coverage_pzf(const PzfCoverageRequest& request, const PzfQuadrature& quad = {});

// Interference-limited coverage (sigma2 = 0), averaged over beta = R / r.
double coverage_pzf_interflimited(int n_t, int n_r, int m, int delta, double alpha, double z,
                                  const QuadratureOptions& opts = {1e-12, 1e-12});

// Interference-limited coverage conditioned on beta.
double coverage_pzf_at_beta(int n_t, int m, int delta, double alpha, double z, double beta);

// Mean interference-to-signal ratio of the split m. +infinity when delta = 0.
// With max_terms the series over k runs only up to k = max_terms.
double mean_inverse_sinr(const NetworkConfig& config, int m,
                         std::optional<int> max_terms = std::nullopt);

// Same metric with the ratio of Gamma functions replaced by Kershaw's bound.
double mean_inverse_sinr_approx(const NetworkConfig& config, int m);

// Number of base stations to cancel. Throws InfeasibleError when no m leaves
// delta >= 1.
int optimal_m(const NetworkConfig& config);

// Every feasible m (delta >= 1) that minimizes mean_inverse_sinr, ties included.
std::vector<int> argmin_mean_inverse_sinr(const NetworkConfig& config);

}  // namespace smcov
