#include "activeinfo/cli/modes.hpp"

#include <algorithm>
#include <cmath>

#include "activeinfo/active_info.hpp"
#include "activeinfo/error.hpp"

namespace activeinfo::cli {
namespace {

void score(ModeBin& bin, double total) {
  bin.empirical_prob = static_cast<double>(bin.count) / total;
  if (bin.baseline_prob > 0.0) {
    bin.active_info_bits = active_information(bin.empirical_prob, bin.baseline_prob).active;
  }
}

}  // namespace

ModeReport mode_hunt(const Dataset& data, const Distribution& baseline, std::size_t bins,
                     double threshold_bits) {
  if (std::isnan(threshold_bits)) throw InvalidParameter("threshold must be a number");
  ModeReport report;
  report.threshold_bits = threshold_bits;
  const double total = static_cast<double>(data.n());

  if (data.is_labeled()) {
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
      ModeBin bin;
      bin.label = data.labels[i];
      bin.count = data.counts[i];
      bin.baseline_prob = probability(baseline, Target::atoms({bin.label}));
      score(bin, total);
      report.bins.push_back(std::move(bin));
    }
  } else {
    if (bins < 2) throw InvalidParameter("mode hunting needs at least 2 bins");
    auto [mn, mx] = std::minmax_element(data.values.begin(), data.values.end());
    const double lo = *mn, hi = *mx;
    if (!(hi > lo)) throw InvalidParameter("mode hunting needs data with a nonzero range");
    std::vector<double> edges(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
      edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    }
    edges.back() = hi;
    std::vector<std::uint64_t> counts(bins, 0);
    for (double v : data.values) {
      auto it = std::upper_bound(edges.begin(), edges.end(), v);
      auto idx = static_cast<std::size_t>(it - edges.begin());
      counts[std::min(idx == 0 ? 0 : idx - 1, bins - 1)]++;
    }
    for (std::size_t i = 0; i < bins; ++i) {
      ModeBin bin;
      bin.lo = edges[i];
      bin.hi = edges[i + 1];
      bin.count = counts[i];
      bin.baseline_prob = probability(baseline, Target(Interval{edges[i], edges[i + 1], true, i + 1 == bins}));
      score(bin, total);
      report.bins.push_back(std::move(bin));
    }
  }

  for (std::size_t i = 0; i < report.bins.size(); ++i) {
    const auto& ai = report.bins[i].active_info_bits;
    if (ai && *ai > threshold_bits) report.flagged.push_back(i);
  }
  return report;
}

}  // namespace activeinfo::cli
