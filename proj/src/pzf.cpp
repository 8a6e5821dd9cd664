#include "smcov/pzf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "smcov/combinatorics.hpp"
#include "smcov/specfun.hpp"

namespace smcov {

namespace {

constexpr int kMaxDelta = 20;

using SignatureTable = std::vector<std::vector<SetPartitionSignature>>;

SignatureTable signature_table(int delta) {
  if (delta > kMaxDelta) throw std::out_of_range("delta exceeds the partition guard of 20");
  SignatureTable table;
  for (int j = 0; j <= delta; ++j) table.push_back(set_partition_signatures(j));
  return table;
}

// c_i in the derivatives of 2F1(N_t, -2/alpha; 1 - 2/alpha; -x).
double faa_coefficient(int i, int n_t, double alpha) {
  const double b = -2.0 / alpha;
  return pochhammer(n_t, i) * pochhammer(b, i) / pochhammer(b + 1.0, i);
}

struct Kernels {
  double lambda0 = 1.0;
  std::vector<double> scaled;  // scaled[i] = -c_i x^i Lambda_i(x) >= 0, i >= 1
};

Kernels kernels(int n_t, double alpha, int delta, double x) {
  Kernels k;
  k.lambda0 = lambda_kernel(0, n_t, alpha, x);
  k.scaled.assign(static_cast<std::size_t>(delta) + 1, 0.0);
  for (int i = 1; i <= delta; ++i)
    k.scaled[i] = -faa_coefficient(i, n_t, alpha) * std::pow(x, i) * lambda_kernel(i, n_t, alpha, x);
  return k;
}

// terms[j][p] = x^j / j! * sum over set partitions of {1..j} into p blocks of
// prod (-c_i Lambda_i(x)). Then (-s)^j / j! L^(j)(s) = L(s) sum_p terms[j][p] (lambda pi R^2)^p.
std::vector<std::vector<double>> block_terms(const SignatureTable& table, const Kernels& k) {
  std::vector<std::vector<double>> terms(table.size());
  for (std::size_t j = 0; j < table.size(); ++j) {
    terms[j].assign(j + 1, 0.0);
    const double inv_fact = 1.0 / static_cast<double>(factorial(static_cast<int>(j)));
    for (const auto& sig : table[j]) {
      double prod = static_cast<double>(sig.weight);
      for (std::size_t i = 0; i < sig.size_multiplicity.size(); ++i)
        if (sig.size_multiplicity[i] > 0) prod *= std::pow(k.scaled[i + 1], sig.size_multiplicity[i]);
      terms[j][sig.block_count] += prod * inv_fact;
    }
  }
  return terms;
}

double at_beta(const SignatureTable& table, int n_t, int m, double alpha, double z, double beta) {
  const double x = std::pow(beta, -alpha) * z;
  const Kernels k = kernels(n_t, alpha, static_cast<int>(table.size()) - 1, x);
  const auto terms = block_terms(table, k);
  double sum = 0.0;
  for (const auto& row : terms)
    for (std::size_t p = 0; p < row.size(); ++p)
      if (row[p] != 0.0) sum += row[p] * pochhammer(m, static_cast<int>(p)) / std::pow(k.lambda0, m + static_cast<double>(p));
  return sum;
}

// E over beta of h(beta) for the split m, through v = 1 / beta on (0, 1).
template <class H>
double average_over_beta(int m, H&& h, const QuadratureOptions& opts) {
  if (m == 1) return h(1.0);
  auto integrand = [m, &h](double v) {
    if (v <= 0.0) return 0.0;
    return 2.0 * (m - 1) * v * std::pow(1.0 - v * v, m - 2) * h(1.0 / v);
  };
  return integrate(integrand, 0.0, 1.0, opts).value;
}

// e^{-a} sum_{i=0}^{n} a^i / i!
double poisson_cdf(int n, double a) {
  if (a == 0.0) return 1.0;
  double term = std::exp(-a);
  double sum = term;
  for (int i = 1; i <= n; ++i) {
    term *= a / i;
    sum += term;
  }
  return std::min(sum, 1.0);
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

double half_alpha_gamma(double alpha) { return std::tgamma(1.0 + alpha / 2.0); }

}  // namespace

double laplace_interference(double s, double R, double lambda, int n_t, double alpha) {
  if (!(s >= 0.0) || !(R > 0.0)) throw std::invalid_argument("laplace_interference: need s >= 0, R > 0");
  if (s == 0.0) return 1.0;
  const double x = std::pow(R, -alpha) * s;
  return std::exp(-lambda * std::numbers::pi * R * R * (lambda_kernel(0, n_t, alpha, x) - 1.0));
}

double laplace_interference_derivative(int order, double s, double R, double lambda, int n_t,
                                       double alpha) {
  if (order < 0) throw std::invalid_argument("laplace_interference_derivative: negative order");
  const double x = std::pow(R, -alpha) * s;
  const double area = lambda * std::numbers::pi * R * R;
  const double l = laplace_interference(s, R, lambda, n_t, alpha);
  std::vector<double> f(static_cast<std::size_t>(order) + 1, 0.0);
  for (int i = 1; i <= order; ++i)
    f[i] = faa_coefficient(i, n_t, alpha) * lambda_kernel(i, n_t, alpha, x);
  // Faa di Bruno with g = exp(-area * (.)): g^(p) = (-area)^p g.
  double sum = 0.0;
  for (const auto& sig : set_partition_signatures(order)) {
    double prod = static_cast<double>(sig.weight) * std::pow(-area, sig.block_count);
    for (std::size_t i = 0; i < sig.size_multiplicity.size(); ++i)
      if (sig.size_multiplicity[i] > 0) prod *= std::pow(f[i + 1], sig.size_multiplicity[i]);
    sum += prod;
  }
  return l * sum * std::pow(-std::pow(R, -alpha), order);
}

double coverage_pzf_at_beta(int n_t, int m, int delta, double alpha, double z, double beta) {
  if (!(beta >= 1.0)) throw std::invalid_argument("coverage_pzf_at_beta: beta must be >= 1");
  if (n_t < 1 || m < 1 || delta < 0 || !(alpha > 2.0) || !(z >= 0.0))
    throw std::invalid_argument("coverage_pzf_at_beta: bad parameters");
  return clamp_probability(at_beta(signature_table(delta), n_t, m, alpha, z, beta));
}

double coverage_pzf_interflimited(int n_t, int n_r, int m, int delta, double alpha, double z,
                                  const QuadratureOptions& opts) {
  if (n_t < 1 || m < 1 || delta < 0 || m * n_t + delta != n_r)
    throw std::invalid_argument("coverage_pzf_interflimited: need m * n_t + delta = n_r");
  if (!(alpha > 2.0) || !(z >= 0.0)) throw std::invalid_argument("coverage_pzf_interflimited: bad alpha or z");
  const SignatureTable table = signature_table(delta);
  auto h = [&](double beta) { return at_beta(table, n_t, m, alpha, z, beta); };
  return clamp_probability(average_over_beta(m, h, opts));
}

double coverage_pzf(const PzfCoverageRequest& request, const PzfQuadrature& quad) {
  const NetworkConfig& c = request.config;
  c.validate();
  const int m = request.split.m;
  const int delta = request.split.delta;
  if (m < 1 || delta < 0 || m * c.n_t + delta != c.n_r)
    throw std::invalid_argument("coverage_pzf: split inconsistent with config");
  const double z = request.z;
  if (!(z >= 0.0)) throw std::invalid_argument("coverage_pzf: z must be >= 0");

  const SignatureTable table = signature_table(delta);
  const double noise = c.n_t * c.sigma2 * std::pow(std::numbers::pi * c.lambda, -c.alpha / 2.0);
  const double log_norm = std::lgamma(static_cast<double>(m));

  auto h = [&](double beta) {
    const double x = std::pow(beta, -c.alpha) * z;
    const Kernels k = kernels(c.n_t, c.alpha, delta, x);
    const auto terms = block_terms(table, k);
    // Radial variable t = pi lambda r^2 beta^2 Lambda_0.
    const double scale = beta * beta * k.lambda0;
    auto radial = [&](double t) {
      if (t <= 0.0) return 0.0;
      const double a = z * noise * std::pow(t / scale, c.alpha / 2.0);
      const double log_t = std::log(t);
      double sum = 0.0;
      for (int j = 0; j <= delta; ++j) {
        const double q = poisson_cdf(delta - j, a);
        if (q == 0.0) continue;
        for (int p = 0; p <= j; ++p) {
          if (terms[j][p] == 0.0) continue;
          const double w = std::exp((m - 1 + p) * log_t - t - log_norm - (m + p) * std::log(k.lambda0));
          sum += terms[j][p] * w * q;
        }
      }
      return sum;
    };
    return integrate(radial, 0.0, kInfinity, quad.inner).value;
  };
  return clamp_probability(average_over_beta(m, h, quad.outer));
}

double mean_inverse_sinr(const NetworkConfig& config, int m, std::optional<int> max_terms) {
  config.validate();
  const int delta = config.n_r - m * config.n_t;
  if (m < 1 || delta < 0) throw std::invalid_argument("mean_inverse_sinr: infeasible m");
  if (delta == 0) return std::numeric_limits<double>::infinity();
  const double a = config.alpha / 2.0;
  const double g = half_alpha_gamma(config.alpha);
  double series = 0.0;
  if (max_terms) {
    for (int k = m; k <= *max_terms; ++k) series += std::exp(std::lgamma(k) - std::lgamma(k + a));
  } else {
    // sum_{k >= m} Gamma(k) / Gamma(k + a) = Gamma(m) / ((a - 1) Gamma(m + a - 1))
    series = std::exp(std::lgamma(m) - std::lgamma(m + a - 1.0)) / (a - 1.0);
  }
  const double noise = config.sigma2 * std::pow(std::numbers::pi * config.lambda, -a) * g;
  return config.n_t * g / (2.0 * delta) * (noise + g * series);
}

double mean_inverse_sinr_approx(const NetworkConfig& config, int m) {
  config.validate();
  const int delta = config.n_r - m * config.n_t;
  if (m < 1 || delta < 0) throw std::invalid_argument("mean_inverse_sinr_approx: infeasible m");
  if (delta == 0) return std::numeric_limits<double>::infinity();
  const double alpha = config.alpha;
  const double g = half_alpha_gamma(alpha);
  const double noise = config.sigma2 * std::pow(std::numbers::pi * config.lambda, -alpha / 2.0) * g;
  const double tail = 2.0 * g * std::pow(m + alpha / 4.0 - 0.5, 1.0 - alpha / 2.0) / (alpha - 2.0);
  return config.n_t * g / (2.0 * delta) * (noise + tail);
}

int optimal_m(const NetworkConfig& config) {
  config.validate();
  const int m_max = (config.n_r - 1) / config.n_t;
  if (m_max < 1)
    throw InfeasibleError("no split leaves delta >= 1 for n_t = " + std::to_string(config.n_t) +
                          ", n_r = " + std::to_string(config.n_r));
  const double alpha = config.alpha;
  const double n_t = config.n_t;
  const double n_r = config.n_r;
  double root;
  if (config.sigma2 == 0.0) {
    root = (1.0 - 2.0 / alpha) * (n_r / n_t - 0.5);
  } else {
    const double noise = config.sigma2 * std::pow(std::numbers::pi * config.lambda, -alpha / 2.0);
    auto h = [&](double m) {
      const double y = m + alpha / 4.0 - 0.5;
      return 2.0 * std::pow(y, 1.0 - alpha / 2.0) * n_t + noise * n_t * (alpha - 2.0) -
             (n_r - m * n_t) * std::pow(y, -alpha / 2.0) * (alpha - 2.0);
    };
    double lo = 0.0;
    double hi = n_r / n_t;
    if (h(lo) >= 0.0) return 1;  // metric increasing in m: no cancellation beyond the own cell
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (h(mid) < 0.0 ? lo : hi) = mid;
    }
    root = 0.5 * (lo + hi);
  }
  const int m = static_cast<int>(std::ceil(root - 1e-12));
  return std::clamp(m, 1, m_max);
}

std::vector<int> argmin_mean_inverse_sinr(const NetworkConfig& config) {
  config.validate();
  const int m_max = (config.n_r - 1) / config.n_t;
  if (m_max < 1) throw InfeasibleError("no split leaves delta >= 1");
  std::vector<double> values;
  for (int m = 1; m <= m_max; ++m) values.push_back(mean_inverse_sinr(config, m));
  const double best = *std::min_element(values.begin(), values.end());
  std::vector<int> out;
  for (int m = 1; m <= m_max; ++m)
    if (values[m - 1] <= best * (1.0 + 1e-12)) out.push_back(m);
  return out;
}

}  // namespace smcov
