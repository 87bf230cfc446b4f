#include "activeinfo/cli/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "activeinfo/cli/errors.hpp"
#include "activeinfo/cli/format.hpp"
#include "activeinfo/error.hpp"

namespace activeinfo::cli {

std::optional<BaselineFamily> parse_family(std::string_view name) {
  if (name == "equiprobable") return BaselineFamily::Equiprobable;
  if (name == "uniform") return BaselineFamily::Uniform;
  if (name == "geometric") return BaselineFamily::Geometric;
  if (name == "exponential") return BaselineFamily::Exponential;
  if (name == "normal") return BaselineFamily::Normal;
  return std::nullopt;
}

BaselineSpec fit_baseline(const Dataset& data, BaselineFamily family, const FitOptions& options) {
  if (family == BaselineFamily::Equiprobable) {
    if (data.is_labeled()) {
      double dummy = 0.0;
      bool numeric = std::ranges::all_of(data.labels, [&](const std::string& l) { return parse_double(l, dummy); });
      if (numeric) return Equiprobable(empirical_pmf(data).support());
      return Equiprobable(FiniteSupport::labeled(data.labels));
    }
    std::set<double> distinct(data.values.begin(), data.values.end());
    return Equiprobable(FiniteSupport::ordered({distinct.begin(), distinct.end()}));
  }

  const auto sample = weighted_values(data);
  if (sample.empty()) throw DataError(data.source + ": no observations to fit");
  double weight = 0.0, sum = 0.0;
  double lo = sample.front().first, hi = sample.front().first;
  for (auto [v, w] : sample) {
    weight += w;
    sum += w * v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double mean = sum / weight;

  switch (family) {
    case BaselineFamily::Geometric:
      for (auto [v, w] : sample) {
        if (v < 1.0 || v != std::floor(v)) {
          throw InvalidParameter("geometric fit needs integer data >= 1 (found " + format_double(v) + ")");
        }
      }
      return Geometric(mean);
    case BaselineFamily::Exponential:
      if (lo < 0.0) throw InvalidParameter("exponential fit needs nonnegative data (found " + format_double(lo) + ")");
      if (!(mean > 0.0)) throw InvalidParameter("exponential fit needs a positive sample mean");
      return Exponential(mean);
    case BaselineFamily::Normal: {
      double ss = 0.0;
      for (auto [v, w] : sample) ss += w * (v - mean) * (v - mean);
      const double variance = ss / weight;
      if (!(variance > 0.0)) throw InvalidParameter("normal fit on degenerate data (zero variance)");
      return Normal(mean, variance);
    }
    case BaselineFamily::Uniform: {
      const double a = options.lo.value_or(lo);
      const double b = options.hi.value_or(hi);
      if (a > lo || b < hi) throw InvalidParameter("declared uniform bounds do not contain the data");
      if (!(b > a)) throw InvalidParameter("uniform fit on degenerate data (zero range)");
      return UniformInterval(a, b);
    }
    case BaselineFamily::Equiprobable:
      break;
  }
  throw InvalidParameter("unsupported family");
}

}  // namespace activeinfo::cli
