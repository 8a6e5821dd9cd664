#pragma once

#include <string>
#include <vector>

#include "smcov/geometry.hpp"
#include "smcov/receiver.hpp"

namespace smcov {

struct CurvePoint {
  double z_db = 0.0;
  double z_linear = 0.0;
  double coverage = 0.0;
};

struct CoverageCurve {
  NetworkConfig config;
  std::string receiver;  // describe() of the receiver
  std::vector<CurvePoint> points;
};

double db_to_linear(double z_db);

// Inclusive grid start, start + step, ... <= stop (with a small tolerance).
// Empty when start > stop.
std::vector<double> db_grid(double start, double stop, double step);

// Points are evaluated concurrently; threads <= 0 uses the OpenMP default.
CoverageCurve coverage_curve(const NetworkConfig& config, const Receiver& rx, const std::vector<double>& z_db,
                             int threads = 0);
CoverageCurve coverage_curve_serial(const NetworkConfig& config, const Receiver& rx,
                                    const std::vector<double>& z_db);

}  // namespace smcov
