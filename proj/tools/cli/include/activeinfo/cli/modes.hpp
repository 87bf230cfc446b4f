#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "activeinfo/cli/dataset.hpp"
#include "activeinfo/distributions.hpp"

namespace activeinfo::cli {

inline constexpr double kDefaultThresholdBits = 0.5;

struct ModeBin {
  std::string label;          // atom label for labeled data, empty otherwise
  std::optional<double> lo;   // bin edges for value data
  std::optional<double> hi;
  std::uint64_t count = 0;
  double empirical_prob = 0.0;
  double baseline_prob = 0.0;
  /// Empty when the baseline gives the bin zero mass (undefined).
  std::optional<double> active_info_bits;
};

struct ModeReport {
  std::vector<ModeBin> bins;
  std::vector<std::size_t> flagged;  // 0-based bin indices
  double threshold_bits = kDefaultThresholdBits;
};

/// Flags bins whose empirical probability exceeds the baseline by more than
/// `threshold_bits` of active information. Value data is split into `bins`
/// equal-width bins over [min, max] (last bin closed); labeled data uses one
/// bin per label and ignores `bins`. Baseline probabilities are the
/// unconditional mass of each bin.
ModeReport mode_hunt(const Dataset& data, const Distribution& baseline, std::size_t bins,
                     double threshold_bits = kDefaultThresholdBits);

}  // namespace activeinfo::cli
