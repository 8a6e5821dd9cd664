#include "smcov/curve.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <stdexcept>

namespace smcov {

double db_to_linear(double z_db) { return std::pow(10.0, z_db / 10.0); }

std::vector<double> db_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
    throw std::invalid_argument("db_grid: bounds must be finite");
  std::vector<double> out;
  if (start > stop) return out;
  if (!(step > 0.0)) throw std::invalid_argument("db_grid: step must be positive");
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

CoverageCurve coverage_curve(const NetworkConfig& config, const Receiver& rx, const std::vector<double>& z_db,
                             int threads) {
  const auto f = coverage_function(config, rx);
  CoverageCurve curve{config, describe(config, rx), std::vector<CurvePoint>(z_db.size())};
  std::exception_ptr error;
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const auto n = static_cast<long>(z_db.size());

#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (long i = 0; i < n; ++i) {
    try {
      const double z = db_to_linear(z_db[i]);
      curve.points[i] = {z_db[i], z, f(z)};
    } catch (...) {
#pragma omp critical(smcov_curve_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return curve;
}

CoverageCurve coverage_curve_serial(const NetworkConfig& config, const Receiver& rx,
                                    const std::vector<double>& z_db) {
  const auto f = coverage_function(config, rx);
  CoverageCurve curve{config, describe(config, rx), {}};
  for (double db : z_db) {
    const double z = db_to_linear(db);
    curve.points.push_back({db, z, f(z)});
  }
  return curve;
}

}  // namespace smcov
