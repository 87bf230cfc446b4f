#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace activeinfo {

class Target;

/// Set of finite-support atoms, named by label.
struct FiniteSubset {
  std::vector<std::string> atoms;
};

/// Real interval with independently open/closed endpoints. Infinite
/// endpoints are allowed (their closedness is ignored).
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = true;
  bool hi_closed = true;
};

/// The half-line (-inf, x], intersected with whatever support it is used on.
struct HalfLineLeq {
  double x = 0.0;
};

/// Finite union of pairwise disjoint targets.
struct UnionOf {
  std::vector<Target> parts;
};

/// A measurable target set T. Construction validates interval ordering and
/// pairwise disjointness of union parts; atom-label overlaps that only show
/// up once labels are resolved against a support are caught at evaluation.
class Target {
 public:
  using Kind = std::variant<FiniteSubset, Interval, HalfLineLeq, UnionOf>;

  Target(FiniteSubset s);
  Target(Interval i);
  Target(HalfLineLeq h);
  Target(UnionOf u);

  static Target atoms(std::vector<std::string> labels) { return Target(FiniteSubset{std::move(labels)}); }
  static Target closed(double lo, double hi) { return Target(Interval{lo, hi, true, true}); }
  static Target at_most(double x) { return Target(HalfLineLeq{x}); }
  /// The open half-line (x, inf), complement of at_most(x).
  static Target greater_than(double x) {
    return Target(Interval{x, std::numeric_limits<double>::infinity(), false, false});
  }

  const Kind& kind() const noexcept { return kind_; }

  /// True when the target is (or is a union of) atom sets only.
  bool is_atom_set() const;
  /// True when the target is (or is a union of) real sets only.
  bool is_real_set() const;

 private:
  Kind kind_;
};

/// Interval view of a real-set leaf (HalfLineLeq becomes (-inf, x]).
Interval as_interval(const Target& leaf);

/// Flattened leaves of a target (nested unions expanded).
std::vector<const Target*> leaves(const Target& t);

}  // namespace activeinfo
