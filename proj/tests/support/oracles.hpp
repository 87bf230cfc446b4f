#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the solver or the probability code it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace activeinfo::testing {

inline std::vector<double> truncated_geometric(int n, double mu) {
  const double p = 1.0 / mu;
  std::vector<double> m(n);
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    m[k - 1] = std::pow(1.0 - p, k - 1) * p;
    total += m[k - 1];
  }
  for (double& v : m) v /= total;
  return m;
}

inline std::vector<double> discretized_normal(std::span<const double> grid, double mu,
                                              double sigma2) {
  std::vector<double> m(grid.size());
  double total = 0.0;
  const double step = grid.size() > 1 ? grid[1] - grid[0] : 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double z = grid[i] - mu;
    m[i] = std::exp(-z * z / (2 * sigma2)) / std::sqrt(2 * std::numbers::pi * sigma2) * step;
    total += m[i];
  }
  for (double& v : m) v /= total;
  return m;
}

inline double total_variation(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

inline double shannon_bits(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

/// Random pmf on n atoms; with `sparse`, some atoms get exactly zero mass.
inline std::vector<double> random_masses(std::mt19937_64& rng, std::size_t n, bool sparse = false) {
  std::exponential_distribution<double> e(1.0);
  std::bernoulli_distribution drop(0.2);
  std::vector<double> m(n);
  double total = 0.0;
  for (auto& v : m) {
    v = (sparse && drop(rng)) ? 0.0 : e(rng);
    total += v;
  }
  if (total == 0.0) {
    m[0] = 1.0;
    total = 1.0;
  }
  for (auto& v : m) v /= total;
  return m;
}

/// Feasible perturbations of `base` that keep sum and every feature
/// expectation fixed: a random direction projected onto the null space of
/// [1; f_1; ...; f_K], scaled to stay inside the simplex.
inline std::vector<std::vector<double>> feasible_perturbations(
    std::span<const double> base, const std::vector<std::vector<double>>& features,
    std::size_t count, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(base.size());
  const auto rows = static_cast<Eigen::Index>(features.size() + 1);
  Eigen::MatrixXd a(rows, n);
  a.row(0).setOnes();
  for (std::size_t k = 0; k < features.size(); ++k) {
    for (Eigen::Index i = 0; i < n; ++i) a(static_cast<Eigen::Index>(k + 1), i) = features[k][i];
  }
  // Orthonormal basis of the row space; project it out.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a.transpose());
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, rows);

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> frac(0.05, 1.0);
  std::vector<std::vector<double>> out;
  while (out.size() < count) {
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) d[i] = gauss(rng);
    d -= q * (q.transpose() * d);
    double t_max = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (d[i] < 0) t_max = std::min(t_max, -base[i] / d[i]);
    }
    if (!(t_max > 0) || !std::isfinite(t_max)) continue;
    const double t = frac(rng) * t_max;
    std::vector<double> p(base.size());
    for (Eigen::Index i = 0; i < n; ++i) p[i] = std::max(0.0, base[i] + t * d[i]);
    out.push_back(std::move(p));
  }
  return out;
}

/// Least-squares residual of log p against [1, f_1, ..., f_K] (max abs).
inline double exponential_family_residual(std::span<const double> p,
                                          const std::vector<std::vector<double>>& features) {
  const auto n = static_cast<Eigen::Index>(p.size());
  const auto cols = static_cast<Eigen::Index>(features.size() + 1);
  Eigen::MatrixXd a(n, cols);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = 1.0;
    for (std::size_t k = 0; k < features.size(); ++k) a(i, static_cast<Eigen::Index>(k + 1)) = features[k][i];
    y[i] = std::log(p[i]);
  }
  Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
  return (a * coef - y).cwiseAbs().maxCoeff();
}

}  // namespace activeinfo::testing
