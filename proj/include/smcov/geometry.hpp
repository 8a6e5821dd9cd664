#pragma once

namespace smcov {

struct NetworkConfig {
  double lambda = 1.0;  // base-station density per unit area
  double alpha = 4.0;   // path-loss exponent, > 2
  double sigma2 = 0.0;  // noise power
  int n_t = 1;          // streams per base station
  int n_r = 1;          // receive antennas

  // Throws std::invalid_argument on an out-of-range field.
  void validate() const;
};

// m = number of base stations whose streams are cancelled (serving one
// included); delta = receive dimensions left for array gain.
struct PzfSplit {
  int m = 1;
  int delta = 0;

  // Throws std::invalid_argument unless 1 <= m and m * n_t <= n_r.
  static PzfSplit from(const NetworkConfig& config, int m);
};

double pdf_serving_distance(double r, double lambda);
double cdf_serving_distance(double r, double lambda);

// Density of the distance R to the m-th nearest base station given that the
// nearest lies at r <= R (m >= 2).
double pdf_conditional_interferer(double R, double r, int m, double lambda);
double cdf_conditional_interferer(double R, double r, int m, double lambda);

// Ratio beta = R / r for the m-th over the first base station; free of lambda.
double pdf_beta(double beta, int m);
double cdf_beta(double beta, int m);
double mean_beta(int m);

}  // namespace smcov
