#include "activeinfo/maxent.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "activeinfo/error.hpp"

namespace activeinfo {

std::vector<double> Feature::evaluate(std::span<const double> support) const {
  std::vector<double> out(support.size());
  switch (kind_) {
    case Kind::Identity:
      std::copy(support.begin(), support.end(), out.begin());
      break;
    case Kind::Square:
      std::transform(support.begin(), support.end(), out.begin(), [](double x) { return x * x; });
      break;
    case Kind::CenteredSquare:
      std::transform(support.begin(), support.end(), out.begin(), [c = center_](double x) {
        return (x - c) * (x - c);
      });
      break;
    case Kind::Tabulated:
      if (table_.size() != support.size()) {
        throw InvalidParameter("tabulated feature has " + std::to_string(table_.size()) +
                               " values for " + std::to_string(support.size()) + " support points");
      }
      out = table_;
      break;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i])) {
      throw InvalidParameter("feature " + name() + " is not finite at support index " +
                             std::to_string(i));
    }
  }
  return out;
}

std::string Feature::name() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Square:
      return "square";
    case Kind::CenteredSquare:
      return "centered_square";
    case Kind::Tabulated:
      return "tabulated";
  }
  return "unknown";
}

namespace {

struct DualState {
  Eigen::VectorXd probs;
  double log_z = 0.0;
};

DualState evaluate_dual(const Eigen::MatrixXd& g, const Eigen::VectorXd& theta) {
  Eigen::VectorXd s = g * theta;
  const double top = s.maxCoeff();
  Eigen::VectorXd w = (s.array() - top).exp().matrix();
  const double z = w.sum();
  return {w / z, top + std::log(z)};
}

std::vector<double> residuals_of(const std::vector<std::vector<double>>& raw,
                                 std::span<const MomentConstraint> constraints,
                                 const Eigen::VectorXd& probs) {
  std::vector<double> r(constraints.size());
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    double expectation = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) expectation += probs[i] * raw[k][i];
    r[k] = std::abs(expectation - constraints[k].value);
  }
  return r;
}

}  // namespace

MaxentSolution solve_maxent(std::span<const double> support,
                            std::span<const MomentConstraint> constraints,
                            const SolverOptions& options) {
  if (!(options.tolerance > 0.0) || !std::isfinite(options.tolerance)) {
    throw InvalidParameter("solver tolerance must be a positive finite number");
  }
  if (options.max_iterations < 0) throw InvalidParameter("max_iterations must be >= 0");

  FiniteSupport atoms = FiniteSupport::ordered({support.begin(), support.end()});
  const auto n = static_cast<Eigen::Index>(support.size());
  const std::size_t k_total = constraints.size();

  if (k_total == 0) {
    return MaxentSolution{Pmf::equiprobable(std::move(atoms)), {}, {}, 0,
                          std::log(static_cast<double>(n))};
  }

  std::vector<std::vector<double>> raw(k_total);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < k_total; ++k) {
    const auto& c = constraints[k];
    if (!std::isfinite(c.value)) throw InvalidParameter("constraint value is not finite");
    raw[k] = c.feature.evaluate(support);
    auto [lo, hi] = std::minmax_element(raw[k].begin(), raw[k].end());
    if (*lo == *hi) {
      // Constant feature: satisfied by every pmf or by none.
      if (std::abs(c.value - *lo) > options.tolerance) {
        throw Infeasible("constraint " + std::to_string(k) + " (" + c.feature.name() +
                         ") is constant over the support and cannot reach the required value");
      }
      continue;
    }
    if (!(c.value > *lo && c.value < *hi)) {
      throw Infeasible("constraint " + std::to_string(k) + " (" + c.feature.name() +
                       ") value lies outside the open feature range over the support");
    }
    active.push_back(k);
  }

  const auto m = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd g(n, m);
  Eigen::VectorXd target(m);
  std::vector<double> spread(active.size());
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto& f = raw[active[j]];
    const double mean = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : f) ss += (v - mean) * (v - mean);
    spread[j] = std::sqrt(ss / static_cast<double>(n));
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = (f[i] - mean) / spread[j];
    target[j] = (constraints[active[j]].value - mean) / spread[j];
  }

  auto unscaled = [&](const Eigen::VectorXd& theta) {
    std::vector<double> lambda(k_total, 0.0);
    for (Eigen::Index j = 0; j < m; ++j) lambda[active[j]] = theta[j] / spread[j];
    return lambda;
  };

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(m);
  DualState state = evaluate_dual(g, theta);
  double objective = state.log_z - target.dot(theta);
  int iteration = 0;

  for (;; ++iteration) {
    auto residuals = residuals_of(raw, constraints, state.probs);
    if (*std::max_element(residuals.begin(), residuals.end()) <= options.tolerance) {
      std::vector<double> masses(state.probs.data(), state.probs.data() + n);
      auto lambda = unscaled(theta);
      // log Z in original feature units.
      std::vector<double> s(support.size(), 0.0);
      for (std::size_t k = 0; k < k_total; ++k) {
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += lambda[k] * raw[k][i];
      }
      const double top = *std::max_element(s.begin(), s.end());
      double z = 0.0;
      for (double v : s) z += std::exp(v - top);
      return MaxentSolution{Pmf(std::move(atoms), std::move(masses)), std::move(lambda),
                            std::move(residuals), iteration, top + std::log(z)};
    }
    if (iteration >= options.max_iterations) {
      throw NoConvergence("maxent solver did not converge within " +
                              std::to_string(options.max_iterations) + " iterations",
                          iteration, std::move(residuals), unscaled(theta));
    }

    const Eigen::VectorXd moments = g.transpose() * state.probs;
    const Eigen::VectorXd gradient = moments - target;
    Eigen::MatrixXd hessian =
        g.transpose() * state.probs.asDiagonal() * g - moments * moments.transpose();

    Eigen::VectorXd step;
    double ridge = 0.0;
    for (int attempt = 0; attempt < 12; ++attempt) {
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hessian + ridge * Eigen::MatrixXd::Identity(m, m));
      if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
        step = ldlt.solve(-gradient);
        if (step.allFinite()) break;
      }
      ridge = ridge == 0.0 ? 1e-12 * (hessian.trace() + 1.0) : ridge * 10.0;
      step.resize(0);
    }
    if (step.size() == 0) {
      throw NoConvergence("maxent Newton system is singular", iteration, std::move(residuals),
                          unscaled(theta));
    }

    // Step halving until the dual objective does not increase (up to rounding).
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(objective));
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
      Eigen::VectorXd candidate = theta + t * step;
      DualState trial = evaluate_dual(g, candidate);
      const double value = trial.log_z - target.dot(candidate);
      if (std::isfinite(value) && value <= objective + slack) {
        theta = std::move(candidate);
        state = std::move(trial);
        objective = value;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw NoConvergence("maxent line search stalled", iteration, std::move(residuals),
                          unscaled(theta));
    }
  }
}

double pmf_entropy(const Pmf& p, InfoUnit unit) {
  double h = 0.0;
  for (double m : p.masses()) {
    if (m > 0.0) h -= m * log_in(unit, m);
  }
  return h;
}

}  // namespace activeinfo
