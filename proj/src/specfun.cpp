#include "smcov/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace smcov {

namespace {

constexpr double kSeriesTol = 1e-17;
constexpr int kMaxSeriesTerms = 100000;

// sum_n (a)_n / (c)_n w^n for a > 0, c > 0, 0 <= w < 1. Every term is positive.
double unit_series(double a, double c, double w) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    term *= (a + n) / (c + n) * w;
    sum += term;
    if (term <= kSeriesTol * sum) return sum;
  }
  throw std::runtime_error("hyp2f1_negz: series did not converge");
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma(double x) {
  if (std::isnan(x)) throw std::domain_error("gamma: NaN argument");
  if (is_nonpositive_integer(x)) throw std::domain_error("gamma: pole at " + std::to_string(x));
  return std::tgamma(x);
}

double pochhammer(double x, int n) {
  if (n < 0) throw std::domain_error("pochhammer: negative order");
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x + i;
  return r;
}

double hyp2f1_negz(double a, double b, double c, double z) {
  if (!(z >= 0.0) || std::isinf(z)) throw std::domain_error("hyp2f1_negz: z must be finite and >= 0");
  if (is_nonpositive_integer(c)) throw std::domain_error("hyp2f1_negz: c is a non-positive integer");
  if (std::abs(c - (b + 1.0)) > 1e-12 * std::max(1.0, std::abs(c)))
    throw std::domain_error("hyp2f1_negz: only c = b + 1 is supported");
  if (!(a > 0.0) || !(b > -1.0)) throw std::domain_error("hyp2f1_negz: need a > 0 and b > -1");
  if (z > 1.0 && !(a > b)) throw std::domain_error("hyp2f1_negz: z > 1 requires a > b");
  if (z == 0.0 || b == 0.0) return 1.0;

  // Pfaff: 2F1(a,b;c;-z) = (1+z)^-a 2F1(a, c-b; c; w), and c - b = 1.
  const double w = z / (1.0 + z);
  if (z <= 1.0 || (b > 0.0 && w < (b + 1.0) / (a + 2.0)))
    return std::pow(1.0 + z, -a) * unit_series(a, c, w);

  // Large z: expand about infinity. The a-branch collapses to a single series
  // because c - b = 1.
  const double q = a - b;
  const double y = 1.0 / (1.0 + z);
  const double lead = gamma(b + 1.0) * gamma(q) / gamma(a) * std::pow(z, -b);
  const double tail = b / q * std::pow(1.0 + z, -a) * unit_series(a, q + 1.0, y);
  return lead - tail;
}

double lambda_kernel(int order, int n_t, double alpha, double z) {
  if (order < 0 || n_t < 1 || !(alpha > 2.0)) throw std::domain_error("lambda_kernel: bad parameters");
  const double b = order - 2.0 / alpha;
  return hyp2f1_negz(n_t + order, b, b + 1.0, z);
}

double theta_kernel(int order, int n_t, double alpha, double z) {
  if (order < 0 || n_t < 1 || !(alpha > 2.0)) throw std::domain_error("theta_kernel: bad parameters");
  const double b = order - 2.0 / alpha;
  return hyp2f1_negz(n_t, b, b + 1.0, z);
}

}  // namespace smcov
