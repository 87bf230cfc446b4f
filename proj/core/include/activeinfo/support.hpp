#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace activeinfo {

/// The atoms of a finite sample space.
///
/// Atoms are either opaque labels (no metric or order) or strictly increasing
/// real points. Real-valued atoms still carry a label (shortest round-trip
/// decimal form) so that atom-set targets work uniformly on both kinds.
class FiniteSupport {
 public:
  /// Opaque atoms labelled "1".."n".
  static FiniteSupport indexed(std::size_t n);
  static FiniteSupport labeled(std::vector<std::string> labels);
  /// Real atoms; throws InvalidParameter unless finite and strictly increasing.
  static FiniteSupport ordered(std::vector<double> points);

  std::size_t size() const noexcept { return labels_.size(); }
  bool is_ordered() const noexcept { return points_.has_value(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Throws UnorderableSupport for label-only supports.
  std::span<const double> points() const;

  /// Index of an atom. On ordered supports the label is parsed as a number
  /// and matched exactly, so "1" and "1.0" name the same atom.
  std::optional<std::size_t> find(std::string_view label) const;

  /// Number of ordered atoms <= x (or < x when strict). Requires ordering.
  std::size_t count_at_most(double x, bool inclusive = true) const;

  friend bool operator==(const FiniteSupport& a, const FiniteSupport& b);

 private:
  FiniteSupport() = default;
  void build_index();

  std::vector<std::string> labels_;
  std::optional<std::vector<double>> points_;
  std::vector<std::size_t> by_label_;  // indices sorted by label
};

/// Finite probability mass function over a FiniteSupport.
///
/// Masses must be nonnegative and sum to 1 within 1e-12. Cumulative sums are
/// cached; the cumulative at the last atom is pinned to exactly 1 so that
/// CDF comparisons at the top of the support are exact.
class Pmf {
 public:
  Pmf(FiniteSupport support, std::vector<double> masses);

  static Pmf over_points(std::vector<double> points, std::vector<double> masses);
  static Pmf over_labels(std::vector<std::string> labels, std::vector<double> masses);
  static Pmf equiprobable(FiniteSupport support);

  const FiniteSupport& support() const noexcept { return support_; }
  std::span<const double> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }
  double mass(std::size_t i) const { return masses_.at(i); }

  /// Sum of masses of atoms [0, k). cumulative(size()) == 1 exactly.
  double cumulative(std::size_t k) const { return cumulative_.at(k); }

  friend bool operator==(const Pmf& a, const Pmf& b) = default;

 private:
  FiniteSupport support_;
  std::vector<double> masses_;
  std::vector<double> cumulative_;
};

inline constexpr double kMassSumTolerance = 1e-12;

}  // namespace activeinfo
