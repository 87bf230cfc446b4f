#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "activeinfo/distributions.hpp"
#include "activeinfo/units.hpp"

namespace activeinfo {

/// Points at which two CDFs are compared when at least one distribution is
/// not finite. Pairs of finite distributions ignore the grid and are
/// compared at every atom.
class GridSpec {
 public:
  /// `count` points spaced by quantile of the 50/50 mixture of the two
  /// distributions, from the `tail` to the 1 - `tail` quantile.
  static GridSpec automatic(std::size_t count = 1001, double tail = 1e-6);
  /// lo, lo + step, ..., up to hi (inclusive, rounding-tolerant).
  static GridSpec uniform(double lo, double hi, double step);

  bool is_automatic() const noexcept { return automatic_; }
  std::vector<double> points(const Distribution& a, const Distribution& b) const;
  std::string describe() const;

 private:
  GridSpec() = default;
  bool automatic_ = true;
  std::size_t count_ = 1001;
  double tail_ = 1e-6;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double step_ = 0.0;
};

struct DominanceReport {
  bool dominated = true;
  /// First x (ascending) with cdf_phi(x) < cdf_varphi(x), when not dominated.
  std::optional<double> witness;
  std::size_t checked_points = 0;
  std::string grid;
};

/// Whether phi is stochastically dominated by varphi in the pointwise-CDF
/// sense: cdf_phi(x) >= cdf_varphi(x) for all x. Note this orients
/// "dominated" as the larger CDF, the reverse of some textbook phrasings.
///
/// Finite pairs compare exactly; anything else allows 1e-12 slack. Two
/// exponentials on an automatic grid are decided analytically by rate.
DominanceReport is_dominated(const Distribution& phi, const Distribution& varphi,
                             const GridSpec& grid = GridSpec::automatic());

/// Checks, at every evaluation point x, that
///   cdf_phi(x) >= cdf_varphi(x)  <=>  I+(phi | varphi)((-inf, x]) >= 0
/// and that whenever the left side holds, I+(phi | varphi)((x, inf)) <= 0.
/// Points where the baseline (varphi) gives the target zero mass are skipped.
bool verify_dominance_lemma(const Distribution& phi, const Distribution& varphi,
                            const GridSpec& grid = GridSpec::automatic(),
                            InfoUnit unit = kDefaultUnit);

/// The points is_dominated would check for this pair (atoms or grid).
std::vector<double> evaluation_points(const Distribution& phi, const Distribution& varphi,
                                      const GridSpec& grid);

}  // namespace activeinfo
