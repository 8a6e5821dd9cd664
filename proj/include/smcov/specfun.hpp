#pragma once

namespace smcov {

// Gamma function on the real line. Throws std::domain_error at the poles.
double gamma(double x);

// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
double pochhammer(double x, int n);

// 2F1(a, b; c; -z) for z >= 0 on the family c = b + 1 used by the coverage
// kernels. Requires a > 0, b > -1 and, for z > 1, a > b. Throws
// std::domain_error outside that domain.
double hyp2f1_negz(double a, double b, double c, double z);

// Lambda_k(z) = 2F1(N_t + k, k - 2/alpha; k - 2/alpha + 1; -z).
double lambda_kernel(int order, int n_t, double alpha, double z);

// Theta_k(z) = 2F1(N_t, k - 2/alpha; k - 2/alpha + 1; -z).
double theta_kernel(int order, int n_t, double alpha, double z);

}  // namespace smcov
