#include "smcov/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace smcov {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const std::function<double(double)>& f, double a, double b) {
  // Kronrod abscissae: x[0] = 0, odd indices are the 10-point Gauss nodes.
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const double f0 = f(c);
  double k = wk[0] * f0;
  double g = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double s = f(c - h * x[i]) + f(c + h * x[i]);
    k += wk[i] * s;
    if (i % 2 == 1) g += wg[i / 2] * s;
  }
  k *= h;
  g *= h;
  if (!std::isfinite(k)) throw QuadratureError("integrate: non-finite integrand on [" +
                                               std::to_string(a) + ", " + std::to_string(b) + "]");
  return {a, b, k, std::abs(k - g)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (std::isinf(b)) {
    if (std::isinf(a) || b < 0) throw QuadratureError("integrate: unsupported interval");
    auto mapped = [&f, a](double t) {
      if (t >= 1.0) return 0.0;
      const double s = 1.0 - t;
      return f(a + t / s) / (s * s);
    };
    return integrate(mapped, 0.0, 1.0, opts);
  }
  if (!(b > a)) return {0.0, 0.0, 0};

  std::priority_queue<Panel> queue;
  Panel first = gk21(f, a, b);
  double total = first.value;
  double error = first.error;
  queue.push(first);
  int panels = 1;

  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (panels >= opts.max_panels)
      throw QuadratureError("integrate: tolerance not reached, error estimate " +
                            std::to_string(error));
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw QuadratureError("integrate: interval cannot be bisected further");
    const Panel left = gk21(f, worst.a, mid);
    const Panel right = gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  // Re-sum to shed drift from the incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  return {value, err, panels};
}

}  // namespace smcov
