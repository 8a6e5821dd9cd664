#include "smcov/mmse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "smcov/combinatorics.hpp"
#include "smcov/specfun.hpp"

namespace smcov {

namespace {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_args(int n_t, int n_r, double alpha, double z) {
  if (n_t < 1 || n_r < 1) throw std::invalid_argument("mmse: antenna counts must be >= 1");
  if (n_r > kMmseMaxReceive) throw std::out_of_range("mmse: n_r exceeds the partition guard of 16");
  if (!(alpha > 2.0)) throw std::invalid_argument("mmse: alpha must exceed 2");
  if (!(z >= 0.0)) throw std::invalid_argument("mmse: z must be >= 0");
}

// weights[m][P]: coefficient of 2^P t^P e^{-t} / Theta_0^{P+1} in the
// coverage integrand for the term z^m, with the z-powers folded in.
std::vector<std::vector<double>> partition_weights(int n_t, int n_r, double alpha, double z) {
  // psi[v] = C(N_t, v) z^v Theta_v(z) / (alpha v - 2)
  std::vector<double> psi(static_cast<std::size_t>(n_r), 0.0);
  for (int v = 1; v < n_r; ++v) {
    const double c = static_cast<double>(binomial(n_t, v));
    if (c != 0.0) psi[v] = c * std::pow(z, v) * theta_kernel(v, n_t, alpha, z) / (alpha * v - 2.0);
  }
  // own[k] = C(N_t-1, k) z^k / (1+z)^{N_t-1}
  std::vector<double> own(static_cast<std::size_t>(n_r), 0.0);
  const double log1pz = std::log1p(z);
  for (int k = 0; k < n_r && k <= n_t - 1; ++k) {
    const double zk = (k == 0) ? 1.0 : std::exp(k * std::log(z));
    own[k] = static_cast<double>(binomial(n_t - 1, k)) * zk * std::exp(-(n_t - 1) * log1pz);
  }

  std::vector<std::vector<double>> weights(static_cast<std::size_t>(n_r),
                                           std::vector<double>(static_cast<std::size_t>(n_r), 0.0));
  std::vector<std::vector<IntegerPartition>> parts(static_cast<std::size_t>(n_r));
  for (int l = 0; l < n_r; ++l) parts[l] = integer_partitions(l);

  for (int m = 0; m < n_r; ++m) {
    for (int k = 0; k <= std::min(m, n_t - 1); ++k) {
      if (own[k] == 0.0) continue;
      for (const auto& p : parts[m - k]) {
        double prod = own[k];
        for (const auto& [value, count] : p.distinct_multiplicity)
          prod *= std::pow(psi[value], count) / static_cast<double>(factorial(count));
        if (prod != 0.0) weights[m][p.size()] += prod;
      }
    }
  }
  return weights;
}

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

}  // namespace

double coverage_mmse_interflimited(int n_t, int n_r, double alpha, double z) {
  check_args(n_t, n_r, alpha, z);
  if (z == 0.0) return 1.0;
  const double theta0 = theta_kernel(0, n_t, alpha, z);
  const auto weights = partition_weights(n_t, n_r, alpha, z);
  CompensatedSum total;
  for (int m = 0; m < n_r; ++m)
    for (int p = 0; p < n_r; ++p)
      if (weights[m][p] != 0.0)
        total.add(weights[m][p] * std::pow(2.0, p) * std::tgamma(p + 1.0) / std::pow(theta0, p + 1.0));
  return std::clamp(total.value(), 0.0, 1.0);
}

double coverage_mmse(const MmseCoverageRequest& request, const QuadratureOptions& opts) {
  const NetworkConfig& c = request.config;
  c.validate();
  const double z = request.z;
  check_args(c.n_t, c.n_r, c.alpha, z);
  if (z == 0.0) return 1.0;
  const double theta0 = theta_kernel(0, c.n_t, c.alpha, z);
  const auto weights = partition_weights(c.n_t, c.n_r, c.alpha, z);
  const double noise = c.n_t * c.sigma2 * std::pow(std::numbers::pi * c.lambda, -c.alpha / 2.0);
  const int n_r = c.n_r;

  // Radial variable t = pi lambda r^2 Theta_0(z).
  auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double a = z * noise * std::pow(t / theta0, c.alpha / 2.0);
    const double log_t = std::log(t);
    double sum = 0.0;
    for (int m = 0; m < n_r; ++m) {
      const double q = poisson_cdf(n_r - m - 1, a);
      if (q == 0.0) continue;
      for (int p = 0; p < n_r; ++p) {
        if (weights[m][p] == 0.0) continue;
        sum += weights[m][p] * q * std::exp(p * std::log(2.0) + p * log_t - t - (p + 1.0) * std::log(theta0));
      }
    }
    return sum;
  };
  return std::clamp(integrate(integrand, 0.0, kInfinity, opts).value, 0.0, 1.0);
}

std::vector<double> interference_polynomial_coefficients(int n_t, const std::vector<double>& gammas,
                                                         int degree) {
  if (n_t < 1 || degree < 0) throw std::invalid_argument("interference_polynomial_coefficients: bad arguments");
  const int n = static_cast<int>(gammas.size());
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  // Sum over ordered tuples of distinct points, one point per part, of
  // prod_j C(N_t, p_j) gamma_{x_j}^{p_j}.
  auto distinct_tuples = [&](const std::vector<int>& parts) {
    double total = 0.0;
    auto rec = [&](auto&& self, std::size_t j, double acc) -> void {
      if (j == parts.size()) {
        total += acc;
        return;
      }
      const double c = static_cast<double>(binomial(n_t, parts[j]));
      if (c == 0.0) return;
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        self(self, j + 1, acc * c * std::pow(gammas[i], parts[j]));
        used[i] = 0;
      }
    };
    rec(rec, 0, 1.0);
    return total;
  };

  std::vector<double> product(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int l = 0; l <= degree; ++l)
    for (const auto& p : integer_partitions(l)) {
      if (p.size() > n) continue;
      double repeats = 1.0;
      for (const auto& [value, count] : p.distinct_multiplicity) repeats *= static_cast<double>(factorial(count));
      product[l] += distinct_tuples(p.parts) / repeats;
    }
  std::vector<double> out(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int m = 0; m <= degree; ++m)
    for (int k = 0; k <= std::min(m, n_t - 1); ++k)
      out[m] += static_cast<double>(binomial(n_t - 1, k)) * product[m - k];
  return out;
}

}  // namespace smcov
