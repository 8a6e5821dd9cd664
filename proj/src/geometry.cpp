#include "smcov/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace smcov {

namespace {

void require_m(int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2, got " + std::to_string(m));
}

}  // namespace

void NetworkConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must exceed 2");
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) throw std::invalid_argument("sigma2 must be >= 0");
  if (n_t < 1) throw std::invalid_argument("n_t must be >= 1");
  if (n_r < 1) throw std::invalid_argument("n_r must be >= 1");
}

PzfSplit PzfSplit::from(const NetworkConfig& config, int m) {
  if (m < 1 || m * config.n_t > config.n_r)
    throw std::invalid_argument("infeasible split: m = " + std::to_string(m) + " with n_t = " +
                                std::to_string(config.n_t) + ", n_r = " + std::to_string(config.n_r));
  return {m, config.n_r - m * config.n_t};
}

double pdf_serving_distance(double r, double lambda) {
  if (r < 0.0) return 0.0;
  const double a = lambda * std::numbers::pi;
  return 2.0 * a * r * std::exp(-a * r * r);
}

double cdf_serving_distance(double r, double lambda) {
  if (r <= 0.0) return 0.0;
  return -std::expm1(-lambda * std::numbers::pi * r * r);
}

double pdf_conditional_interferer(double R, double r, int m, double lambda) {
  require_m(m);
  if (R < r) return 0.0;
  const double a = lambda * std::numbers::pi;
  const double u = a * (R * R - r * r);
  if (m == 2) return 2.0 * a * R * std::exp(-u);
  if (u == 0.0) return 0.0;
  // 2 a R u^{m-2} e^{-u} / (m-2)!
  return 2.0 * a * R * std::exp((m - 2) * std::log(u) - u - std::lgamma(m - 1.0));
}

double cdf_conditional_interferer(double R, double r, int m, double lambda) {
  require_m(m);
  if (R <= r) return 0.0;
  const double u = lambda * std::numbers::pi * (R * R - r * r);
  // Poisson tail: P(at least m-1 points in the annulus).
  double term = std::exp(-u);
  double below = 0.0;
  for (int k = 0; k <= m - 2; ++k) {
    below += term;
    term *= u / (k + 1);
  }
  return 1.0 - below;
}

double pdf_beta(double beta, int m) {
  require_m(m);
  if (beta <= 1.0) return 0.0;
  const double inv2 = 1.0 / (beta * beta);
  return 2.0 * (m - 1) * inv2 / beta * std::pow(1.0 - inv2, m - 2);
}

double cdf_beta(double beta, int m) {
  require_m(m);
  if (beta <= 1.0) return 0.0;
  return std::pow(1.0 - 1.0 / (beta * beta), m - 1);
}

double mean_beta(int m) {
  if (m < 1) throw std::invalid_argument("mean_beta: m must be >= 1");
  if (m == 1) return 1.0;
  return std::sqrt(std::numbers::pi) * std::exp(std::lgamma(m) - std::lgamma(m - 0.5));
}

}  // namespace smcov
