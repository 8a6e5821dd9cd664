#pragma once

#include <vector>

#include "smcov/geometry.hpp"
#include "smcov/quadrature.hpp"

namespace smcov {

struct MmseCoverageRequest {
  NetworkConfig config;
  double z = 1.0;  // linear SINR threshold
};

inline constexpr int kMmseMaxReceive = 16;

// P[SINR > z] with noise; one radial integral, done numerically when sigma2 > 0.
double coverage_mmse(const MmseCoverageRequest& request,
                     const QuadratureOptions& opts = {1e-10, 1e-10});

// Interference-limited coverage, closed form. Independent of lambda.
double coverage_mmse_interflimited(int n_t, int n_r, double alpha, double z);

// Coefficients C_0..C_{degree} of D(z) = (1+z)^{N_t-1} prod_x (1 + gamma_x z)^{N_t}
// for a finite set of relative interferer powers, through the integer-partition
// expansion of the product.
std::vector<double> interference_polynomial_coefficients(int n_t, const std::vector<double>& gammas,
                                                         int degree);

}  // namespace smcov
