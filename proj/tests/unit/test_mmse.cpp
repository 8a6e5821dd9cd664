#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles/frozen_values.hpp"
#include "smcov/mmse.hpp"
#include "smcov/pzf.hpp"

using namespace smcov;

namespace {

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (1+z)^{N_t-1} prod_x (1 + g_x z)^{N_t} by repeated multiplication.
std::vector<double> brute_force_d(int n_t, const std::vector<double>& gammas) {
  std::vector<double> d{1.0};
  for (int i = 0; i < n_t - 1; ++i) d = poly_mul(d, {1.0, 1.0});
  for (double g : gammas)
    for (int i = 0; i < n_t; ++i) d = poly_mul(d, {1.0, g});
  return d;
}

}  // namespace

TEST_CASE("closed form matches the mpmath oracle") {
  for (const auto& e : oracle::kMmse)
    CHECK(std::abs(coverage_mmse_interflimited(e.n_t, e.n_r, e.alpha, e.z) - e.value) < 1e-12);
  CHECK(coverage_mmse_interflimited(1, 1, 4.0, 1.0) == doctest::Approx(1.0 / (1.0 + std::numbers::pi / 4.0)));
  CHECK(coverage_mmse_interflimited(2, 3, 4.0, 0.0) == 1.0);
}

TEST_CASE("radial-integral route reduces to the closed form, for any lambda") {
  for (const auto& e : oracle::kMmse)
    for (double lambda : {0.25, 4.0}) {
      const NetworkConfig c{lambda, e.alpha, 0.0, e.n_t, e.n_r};
      CHECK(std::abs(coverage_mmse({c, e.z}) - e.value) < 1e-8);
    }
}

TEST_CASE("noise lowers coverage") {
  NetworkConfig c{1.0, 4.0, 0.0, 2, 4};
  const double quiet = coverage_mmse({c, 1.0});
  c.sigma2 = 0.3;
  const double noisy = coverage_mmse({c, 1.0});
  CHECK(noisy < quiet);
  CHECK(noisy > 0.0);
}

TEST_CASE("coefficients of D(z) from the partition expansion") {
  // Dyadic and small-integer powers keep every product exact in double precision.
  const std::vector<std::vector<double>> sets = {
      {}, {1.0}, {0.5, 2.0}, {3.0, 0.25, 1.0}, {0.5, 0.5, 2.0, 0.125}, {2.0, 3.0, 1.0, 0.25}};
  for (int n_t = 1; n_t <= 3; ++n_t)
    for (const auto& g : sets) {
      const auto brute = brute_force_d(n_t, g);
      const int degree = static_cast<int>(brute.size()) - 1;
      const auto expansion = interference_polynomial_coefficients(n_t, g, degree);
      REQUIRE(expansion.size() == brute.size());
      for (std::size_t m = 0; m < brute.size(); ++m) CHECK(expansion[m] == brute[m]);
    }
}

TEST_CASE("MMSE dominates PZF") {
  for (int n_t = 1; n_t <= 3; ++n_t)
    for (int n_r = n_t; n_r <= 6; ++n_r)
      for (double z : {0.1, 1.0, 10.0})
        for (int m = 1; m * n_t <= n_r; ++m) {
          const double pzf = coverage_pzf_interflimited(n_t, n_r, m, n_r - m * n_t, 4.0, z);
          CHECK(coverage_mmse_interflimited(n_t, n_r, 4.0, z) >= pzf - 1e-9);
        }
}

TEST_CASE("monotone in z and in N_r") {
  for (int n_t : {1, 2, 4}) {
    double prev = 1.0;
    for (double db = -10; db <= 25; db += 2.5) {
      const double v = coverage_mmse_interflimited(n_t, 4, 4.0, std::pow(10.0, db / 10));
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
    double last = 0.0;
    for (int n_r = 1; n_r <= 10; ++n_r) {
      const double v = coverage_mmse_interflimited(n_t, n_r, 4.0, 2.0);
      CHECK(v >= last - 1e-12);
      last = v;
    }
  }
}

TEST_CASE("partition guard") {
  CHECK_NOTHROW(coverage_mmse_interflimited(2, 16, 4.0, 1.0));
  CHECK_THROWS_AS(coverage_mmse_interflimited(2, 17, 4.0, 1.0), std::out_of_range);
}
