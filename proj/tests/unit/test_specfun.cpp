#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/frozen_values.hpp"
#include "smcov/specfun.hpp"
#include "support/stats.hpp"

using namespace smcov;
using testing_support::rel_err;

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

// Pfaff-mapped defining series in quadruple precision:
// 2F1(a, b; b+1; -z) = (1+z)^-a sum_n (a)_n / (b+1)_n w^n, w = z / (1+z).
double quad_series(double a, double b, double z) {
  const Quad w = Quad(z) / (1 + Quad(z));
  Quad term = 1, sum = 1;
  for (int n = 0; n < 2000000; ++n) {
    term *= (Quad(a) + n) / (Quad(b) + 1 + n) * w;
    sum += term;
    if (term < sum * Quad(1e-25)) break;
  }
  return static_cast<double>(sum * boost::multiprecision::pow(1 + Quad(z), -Quad(a)));
}

}  // namespace

TEST_CASE("gamma matches frozen values and rejects poles") {
  for (const auto& g : oracle::kGamma) CHECK(rel_err(smcov::gamma(g.x), g.value) < 1e-13);
  CHECK(smcov::gamma(1.0) == 1.0);
  CHECK(rel_err(smcov::gamma(0.5), 1.7724538509055160) < 1e-15);
  CHECK(rel_err(smcov::gamma(7.5), 1871.254305797788346) < 1e-13);
  CHECK_THROWS_AS(smcov::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(smcov::gamma(-3.0), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(-0.5, 3) == doctest::Approx(-0.375).epsilon(1e-15));
  for (double x : {0.3, 1.7, 4.25})
    for (int n : {1, 4, 9}) CHECK(rel_err(pochhammer(x, n), std::tgamma(x + n) / std::tgamma(x)) < 1e-13);
}

TEST_CASE("hyp2f1_negz reproduces the frozen grid") {
  double worst = 0.0;
  for (const auto& h : oracle::kHyp2f1) {
    const double v = hyp2f1_negz(h.a, h.b, h.b + 1.0, h.z);
    worst = std::max(worst, rel_err(v, h.value));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("hyp2f1_negz agrees with the quad-precision series") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ua(1.0, 16.0), ub(-0.95, 15.5), lz(-4.0, 2.0);
  int checked = 0;
  while (checked < 150) {
    const double a = ua(rng), b = ub(rng), z = std::pow(10.0, lz(rng));
    if (b >= a) continue;
    ++checked;
    CHECK(rel_err(hyp2f1_negz(a, b, b + 1.0, z), quad_series(a, b, z)) < 1e-12);
  }
}

TEST_CASE("hyp2f1_negz derivative identity") {
  // d/dz 2F1(a,b;c;-z) = -(ab/c) 2F1(a+1,b+1;c+1;-z)
  for (double a : {1.0, 2.5, 6.0})
    for (double b : {-0.5, -0.25, 0.75})
      for (double z : {0.2, 1.7, 8.0, 40.0}) {
        const double h = 1e-4 * std::max(1.0, z);
        const double fd = (hyp2f1_negz(a, b, b + 1, z + h) - hyp2f1_negz(a, b, b + 1, z - h)) / (2 * h);
        const double exact = -(a * b / (b + 1)) * hyp2f1_negz(a + 1, b + 1, b + 2, z);
        CHECK(rel_err(fd, exact) < 1e-6);
      }
}

TEST_CASE("hyp2f1_negz is continuous across its evaluation branches") {
  for (double a : {1.5, 3.0, 16.0})
    for (double b : {-0.5, 0.5, 2.5}) {
      if (b >= a) continue;
      const double z_switch = (b > 0) ? (b + 1) / (a + 1 - b) : 1.0;
      for (double z0 : {1.0, z_switch}) {
        const double lo = hyp2f1_negz(a, b, b + 1, z0 * (1 - 1e-12));
        const double hi = hyp2f1_negz(a, b, b + 1, z0 * (1 + 1e-12));
        CHECK(rel_err(lo, hi) < 1e-10);
      }
    }
}

TEST_CASE("hyp2f1_negz domain") {
  CHECK(hyp2f1_negz(3.0, -0.5, 0.5, 0.0) == 1.0);
  CHECK(hyp2f1_negz(3.0, 0.0, 1.0, 5.0) == 1.0);
  CHECK_THROWS_AS(hyp2f1_negz(1.0, -0.5, 0.5, -1.0), std::domain_error);
  CHECK_THROWS_AS(hyp2f1_negz(1.0, -0.5, 0.7, 1.0), std::domain_error);
  CHECK_THROWS_AS(hyp2f1_negz(1.0, 2.0, 3.0, 5.0), std::domain_error);
  CHECK_THROWS_AS(hyp2f1_negz(1.0, -1.0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("lambda and theta kernels") {
  for (const auto& k : oracle::kLambda) CHECK(rel_err(lambda_kernel(k.order, k.n_t, k.alpha, k.z), k.value) < 1e-12);
  for (const auto& k : oracle::kTheta) CHECK(rel_err(theta_kernel(k.order, k.n_t, k.alpha, k.z), k.value) < 1e-12);
  // 2F1(1, -1/2; 1/2; -s) = 1 + sqrt(s) atan(sqrt(s))
  for (double s : {0.1, 1.0, 7.0, 1e3})
    CHECK(rel_err(lambda_kernel(0, 1, 4.0, s), 1.0 + std::sqrt(s) * std::atan(std::sqrt(s))) < 1e-13);
  for (int n_t : {1, 3})
    for (double z : {0.0, 0.5, 20.0}) {
      CHECK(theta_kernel(0, n_t, 4.0, z) == lambda_kernel(0, n_t, 4.0, z));
      CHECK(lambda_kernel(0, n_t, 3.0, z) >= 1.0);
    }
}
