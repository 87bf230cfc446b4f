#pragma once

#include <span>
#include <string>
#include <vector>

#include "activeinfo/support.hpp"
#include "activeinfo/units.hpp"

namespace activeinfo {

/// Feature function evaluated at each support point.
class Feature {
 public:
  enum class Kind { Identity, Square, CenteredSquare, Tabulated };

  static Feature identity() { return Feature(Kind::Identity); }
  static Feature square() { return Feature(Kind::Square); }
  static Feature centered_square(double center) {
    Feature f(Kind::CenteredSquare);
    f.center_ = center;
    return f;
  }
  /// One value per support point, in support order.
  static Feature tabulated(std::vector<double> values) {
    Feature f(Kind::Tabulated);
    f.table_ = std::move(values);
    return f;
  }

  Kind kind() const noexcept { return kind_; }
  double center() const noexcept { return center_; }
  const std::vector<double>& table() const noexcept { return table_; }

  /// Feature values over the support; throws InvalidParameter if any is not finite.
  std::vector<double> evaluate(std::span<const double> support) const;

  std::string name() const;

 private:
  explicit Feature(Kind k) : kind_(k) {}
  Kind kind_;
  double center_ = 0.0;
  std::vector<double> table_;
};

/// Requires E[feature(X)] == value.
struct MomentConstraint {
  Feature feature;
  double value = 0.0;
};

struct SolverOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
};

struct MaxentSolution {
  Pmf pmf;
  /// Lagrange multipliers in the original feature units: log p_i = sum_k lambda_k f_k(x_i) - log Z.
  std::vector<double> multipliers;
  /// |E_p f_k - value_k| per constraint at return.
  std::vector<double> residuals;
  int iterations = 0;
  double log_partition = 0.0;
};

/// Maximum-entropy Pmf on a finite real support subject to moment constraints.
///
/// Minimises the convex dual log Z(lambda) - lambda . value by damped Newton
/// iteration, starting from lambda = 0 (equiprobability). Features are
/// standardised over the support before iterating.
///
/// Throws Infeasible when a constraint value lies outside the open range of
/// its feature over the support, NoConvergence (with residuals and the last
/// multipliers) when the iteration budget runs out.
MaxentSolution solve_maxent(std::span<const double> support,
                            std::span<const MomentConstraint> constraints,
                            const SolverOptions& options = {});

/// Shannon entropy -sum p log p with 0 log 0 = 0.
double pmf_entropy(const Pmf& p, InfoUnit unit = kDefaultUnit);

}  // namespace activeinfo
