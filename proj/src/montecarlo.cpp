#include "smcov/montecarlo.hpp"

#include <omp.h>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include <cmath>
#include <exception>
#include <numbers>

namespace smcov {

namespace {

constexpr int kMaxResample = 1000;
constexpr double kRankTol = 1e-10;
constexpr double kMaxCondition = 1e12;
constexpr double kDiagonalFloor = 1e-12;

// Sorted distances of a PPP in the disk: unit-rate arrivals in the variable pi lambda d^2.
void sample_distances(double lambda, double radius, Engine& engine, std::vector<double>& out) {
  boost::random::exponential_distribution<double> exp1(1.0);
  const double scale = std::numbers::pi * lambda;
  const double limit = scale * radius * radius;
  out.clear();
  double area = exp1(engine);
  while (area <= limit) {
    out.push_back(std::sqrt(area / scale));
    area += exp1(engine);
  }
}

void fill_channels(Eigen::MatrixXcd& h, Engine& engine) {
  boost::random::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  for (Eigen::Index j = 0; j < h.cols(); ++j)
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      h(i, j) = {re, im};
    }
}

// Orthonormalize `vectors` column by column, two Gram-Schmidt passes each.
Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& vectors) {
  Eigen::MatrixXcd q(vectors.rows(), vectors.cols());
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::VectorXcd u = vectors.col(j);
    const double norm0 = u.norm();
    for (int pass = 0; pass < 2; ++pass)
      if (j > 0) u -= q.leftCols(j) * (q.leftCols(j).adjoint() * u);
    const double nu = u.norm();
    if (!(nu > kRankTol * norm0)) throw RankDeficientError("pzf_filter: interference vectors are rank deficient");
    q.col(j) = u / nu;
  }
  return q;
}

double residual_interference_gain(int n_t, Engine& engine) {
  boost::random::exponential_distribution<double> exp1(1.0);
  double g = 0.0;
  for (int q = 0; q < n_t; ++q) g += exp1(engine);
  return g;
}

// (r / d)^alpha, with a multiply-only path for even integer alpha.
double relative_power(double r, double d, double alpha) {
  const double half = alpha / 2.0;
  const double ratio = (r * r) / (d * d);
  if (half == std::floor(half) && half <= 8.0) {
    double p = 1.0;
    for (int i = 0; i < static_cast<int>(half); ++i) p *= ratio;
    return p;
  }
  return std::pow(ratio, half);
}

struct Resolved {
  bool pzf = false;
  PzfSplit split;
};

Resolved resolve(const SimulationRequest& request) {
  Resolved r;
  if (const auto* p = std::get_if<PzfReceiver>(&request.receiver)) {
    r.pzf = true;
    r.split = resolve_split(request.config, *p);
  }
  return r;
}

// PZF draw that keeps explicit channels only for the base stations inside the
// cancellation set. Beyond it, |v^H h|^2 is exponential and independent of v.
double pzf_fast_draw(const NetworkConfig& c, const PzfSplit& split, double radius, Engine& engine) {
  NetworkRealization net;
  net.n_t = c.n_t;
  net.n_r = c.n_r;
  std::vector<double> d;
  sample_distances(c.lambda, radius, engine, d);
  if (static_cast<int>(d.size()) <= split.m) throw ConditioningError("too few base stations in the window");
  net.distances.assign(d.begin(), d.begin() + split.m);
  net.channels.resize(c.n_r, static_cast<Eigen::Index>(split.m) * c.n_t);
  fill_channels(net.channels, engine);

  const Eigen::VectorXcd v = pzf_filter(net, split, 0);
  const double s = std::norm(v.dot(net.column(0, 0)));
  const double r = d.front();
  double interference = 0.0;
  for (std::size_t b = static_cast<std::size_t>(split.m); b < d.size(); ++b)
    interference += relative_power(r, d[b], c.alpha) * residual_interference_gain(c.n_t, engine);
  const double noise = c.n_t * c.sigma2 * std::pow(r, c.alpha);
  return s / (noise + interference);
}

double mmse_draw(const NetworkRealization& net, const NetworkConfig& c, int* regularized);
NetworkRealization sample_network(const NetworkConfig& config, double radius, Engine& engine, bool positions);

double draw(const SimulationRequest& request, const Resolved& rx, Engine& engine, int* regularized) {
  const NetworkConfig& c = request.config;
  const double radius = window_radius(c.lambda, request.window_factor);
  if (rx.pzf && !request.explicit_channels) return pzf_fast_draw(c, rx.split, radius, engine);
  const NetworkRealization net = sample_network(c, radius, engine, false);
  if (rx.pzf) {
    if (net.count() <= rx.split.m) throw ConditioningError("too few base stations in the window");
    return pzf_sinr(net, c, rx.split, 0);
  }
  return mmse_draw(net, c, regularized);
}

double trial(const SimulationRequest& request, const Resolved& rx, std::uint64_t index, int* resampled,
             int* regularized) {
  Engine engine = trial_engine(request.seed, index);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    try {
      const double s = draw(request, rx, engine, regularized);
      if (resampled) *resampled = attempt;
      return s;
    } catch (const RankDeficientError&) {
    } catch (const ConditioningError&) {
    }
  }
  throw std::runtime_error("simulate: too many degenerate draws in one trial");
}

McEstimate summarize(const std::vector<double>& x, std::uint64_t seed) {
  McEstimate e;
  e.trials = static_cast<std::int64_t>(x.size());
  e.seed = seed;
  if (x.empty()) return e;
  double sum = 0.0;
  for (double v : x) sum += v;
  e.mean = sum / static_cast<double>(x.size());
  if (x.size() > 1) {
    double ss = 0.0;
    for (double v : x) ss += (v - e.mean) * (v - e.mean);
    e.std_error = std::sqrt(ss / static_cast<double>(x.size() - 1) / static_cast<double>(x.size()));
  }
  return e;
}

void check_request(const SimulationRequest& request) {
  request.config.validate();
  if (request.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
  if (!(request.window_factor > 0.0)) throw std::invalid_argument("simulate: window factor must be positive");
}

}  // namespace

Engine trial_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Engine(seq);
}

double window_radius(double lambda, double window_factor) {
  return window_factor / std::sqrt(lambda * std::numbers::pi);
}

namespace {

// Positions are skipped when only distances matter; the draw order is then
// distances followed by channels.
NetworkRealization sample_network(const NetworkConfig& config, double radius, Engine& engine, bool positions) {
  config.validate();
  if (!(radius > 0.0)) throw std::invalid_argument("sample_network: window radius must be positive");
  NetworkRealization net;
  net.n_t = config.n_t;
  net.n_r = config.n_r;
  for (int attempt = 0; net.distances.empty(); ++attempt) {
    if (attempt == kMaxResample) throw std::runtime_error("sample_network: window is always empty");
    sample_distances(config.lambda, radius, engine, net.distances);
  }
  if (positions) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    net.bs_positions.reserve(net.distances.size());
    for (double d : net.distances) {
      const double phi = angle(engine);
      net.bs_positions.push_back({d * std::cos(phi), d * std::sin(phi)});
    }
  }
  net.channels.resize(config.n_r, static_cast<Eigen::Index>(net.count()) * config.n_t);
  fill_channels(net.channels, engine);
  return net;
}

}  // namespace

NetworkRealization sample_network(const NetworkConfig& config, double radius, Engine& engine) {
  return sample_network(config, radius, engine, true);
}

NetworkRealization sample_network(const NetworkConfig& config, double radius, std::uint64_t seed) {
  Engine engine = trial_engine(seed, 0);
  return sample_network(config, radius, engine);
}

Eigen::VectorXcd pzf_filter(const NetworkRealization& net, const PzfSplit& split, int stream) {
  const int n_t = net.n_t;
  if (stream < 0 || stream >= n_t) throw std::invalid_argument("pzf_filter: stream out of range");
  if (split.m < 1 || split.m * n_t > net.n_r) throw std::invalid_argument("pzf_filter: infeasible split");
  if (split.m > net.count()) throw std::invalid_argument("pzf_filter: fewer base stations than m");

  Eigen::MatrixXcd cancel(net.n_r, split.m * n_t - 1);
  Eigen::Index j = 0;
  for (int q = 0; q < n_t; ++q)
    if (q != stream) cancel.col(j++) = net.column(0, q);
  for (int b = 1; b < split.m; ++b)
    for (int q = 0; q < n_t; ++q) cancel.col(j++) = net.column(b, q);

  const Eigen::VectorXcd h = net.column(0, stream);
  Eigen::VectorXcd p = h;
  if (cancel.cols() > 0) {
    const Eigen::MatrixXcd q = orthonormal_basis(cancel);
    for (int pass = 0; pass < 2; ++pass) p -= q * (q.adjoint() * p);
  }
  const double norm = p.norm();
  if (!(norm > kRankTol * h.norm())) throw RankDeficientError("pzf_filter: projected channel vanishes");
  return p / norm;
}

double pzf_sinr(const NetworkRealization& net, const NetworkConfig& config, const PzfSplit& split, int stream) {
  const Eigen::VectorXcd v = pzf_filter(net, split, stream);
  const double r = net.serving_distance();
  const double s = std::norm(v.dot(net.column(0, stream)));
  double interference = 0.0;
  for (int b = split.m; b < net.count(); ++b) {
    const double g = relative_power(r, net.distances[b], config.alpha);
    for (int q = 0; q < net.n_t; ++q) interference += g * std::norm(v.dot(net.column(b, q)));
  }
  const double denom = config.n_t * config.sigma2 * std::pow(r, config.alpha) + interference;
  if (!(denom > 0.0)) throw ConditioningError("pzf_sinr: no residual interference or noise");
  return s / denom;
}

namespace {

double mmse_draw(const NetworkRealization& net, const NetworkConfig& c, int* regularized) {
  const int n_r = net.n_r;
  const int n_t = net.n_t;
  const double r = net.serving_distance();
  const Eigen::Index cols = net.channels.cols() - 1;

  // Every interfering column, scaled by the square root of its relative power.
  Eigen::MatrixXcd g(n_r, cols);
  Eigen::Index j = 0;
  for (int q = 1; q < n_t; ++q) g.col(j++) = net.column(0, q);
  for (int b = 1; b < net.count(); ++b) {
    const double w = std::sqrt(relative_power(r, net.distances[b], c.alpha));
    g.middleCols(j, n_t) = w * net.channels.middleCols(static_cast<Eigen::Index>(b) * n_t, n_t);
    j += n_t;
  }

  Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(n_r, n_r);
  cov.diagonal().array() += c.n_t * c.sigma2 * std::pow(r, c.alpha);
  if (c.sigma2 == 0.0 && cols < n_r) {
    cov.diagonal().array() += kDiagonalFloor;
    if (regularized) *regularized = 1;
  }
  if (cols > 0) cov.selfadjointView<Eigen::Lower>().rankUpdate(g);
  const Eigen::MatrixXcd full = cov.selfadjointView<Eigen::Lower>();

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(full, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxCondition) throw ConditioningError("mmse_sinr: covariance is ill-conditioned");

  const Eigen::VectorXcd h = net.column(0, 0);
  const Eigen::LLT<Eigen::MatrixXcd> llt(full);
  return std::real(h.dot(llt.solve(h)));
}

}  // namespace

double mmse_sinr(const NetworkRealization& net, const NetworkConfig& config, int stream) {
  if (stream != 0) {
    // Relabel so that the requested stream comes first.
    NetworkRealization swapped = net;
    swapped.channels.col(0).swap(swapped.channels.col(stream));
    return mmse_draw(swapped, config, nullptr);
  }
  return mmse_draw(net, config, nullptr);
}

double simulate_trial(const SimulationRequest& request, std::uint64_t index, int* resampled, int* regularized) {
  check_request(request);
  return trial(request, resolve(request), index, resampled, regularized);
}

SinrSamples simulate_sinr(const SimulationRequest& request, int threads) {
  check_request(request);
  const Resolved rx = resolve(request);
  const std::int64_t n = request.trials;
  SinrSamples out;
  out.sinr.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<int> resampled(static_cast<std::size_t>(n), 0);
  std::vector<int> regularized(static_cast<std::size_t>(n), 0);
  std::exception_ptr error;
  const int workers = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out.sinr[i] = trial(request, rx, static_cast<std::uint64_t>(i), &resampled[i], &regularized[i]);
    } catch (...) {
#pragma omp critical(smcov_simulate_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (std::int64_t i = 0; i < n; ++i) {
    out.resampled += resampled[i];
    out.regularized += regularized[i];
  }
  return out;
}

SinrSamples simulate_sinr_serial(const SimulationRequest& request) {
  check_request(request);
  const Resolved rx = resolve(request);
  SinrSamples out;
  out.sinr.reserve(static_cast<std::size_t>(request.trials));
  for (std::int64_t i = 0; i < request.trials; ++i) {
    int resampled = 0;
    int regularized = 0;
    out.sinr.push_back(trial(request, rx, static_cast<std::uint64_t>(i), &resampled, &regularized));
    out.resampled += resampled;
    out.regularized += regularized;
  }
  return out;
}

McEstimate coverage_from_samples(const SinrSamples& samples, double z, std::uint64_t seed) {
  std::vector<double> hit(samples.sinr.size());
  for (std::size_t i = 0; i < hit.size(); ++i) hit[i] = samples.sinr[i] > z ? 1.0 : 0.0;
  return summarize(hit, seed);
}

McEstimate rate_from_samples(const SinrSamples& samples, std::uint64_t seed) {
  std::vector<double> rate(samples.sinr.size());
  for (std::size_t i = 0; i < rate.size(); ++i) rate[i] = std::log2(1.0 + samples.sinr[i]);
  return summarize(rate, seed);
}

McEstimate estimate_coverage(const SimulationRequest& request, double z, int threads) {
  return coverage_from_samples(simulate_sinr(request, threads), z, request.seed);
}

McEstimate estimate_rate(const SimulationRequest& request, int threads) {
  return rate_from_samples(simulate_sinr(request, threads), request.seed);
}

}  // namespace smcov
