#pragma once

#include <functional>
#include <limits>
#include <stdexcept>

namespace smcov {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b]. An infinite
// b is handled through x = a + t / (1 - t). Throws QuadratureError when the
// tolerance is not met within max_panels.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace smcov
