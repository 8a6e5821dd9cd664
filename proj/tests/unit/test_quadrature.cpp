#include <doctest.h>

#include <cmath>

#include "smcov/quadrature.hpp"

using namespace smcov;

TEST_CASE("polynomials and smooth integrands") {
  CHECK(integrate([](double x) { return 3 * x * x; }, 0.0, 2.0).value == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::cos(x); }, 0.0, 10.0).value ==
        doctest::Approx(std::sin(10.0)).epsilon(1e-12));
  CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0).value == 0.0);
}

TEST_CASE("semi-infinite intervals") {
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, kInfinity).value == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(integrate([](double x) { return std::pow(x, 5) * std::exp(-x); }, 0.0, kInfinity).value ==
        doctest::Approx(120.0).epsilon(1e-11));
  CHECK(integrate([](double x) { return 1.0 / (x * x); }, 1.0, kInfinity).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("endpoint singularities are resolved adaptively") {
  const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, {1e-12, 1e-12, 4000});
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(r.panels > 1);
}

TEST_CASE("failure to converge throws") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {1e-12, 1e-12, 50}), QuadratureError);
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), QuadratureError);
}
