#pragma once

#include <optional>
#include <string_view>

#include "activeinfo/cli/dataset.hpp"
#include "activeinfo/distributions.hpp"

namespace activeinfo::cli {

enum class BaselineFamily { Equiprobable, Uniform, Geometric, Exponential, Normal };

std::optional<BaselineFamily> parse_family(std::string_view name);

struct FitOptions {
  /// Declared bounds for the uniform family; observed min/max otherwise.
  std::optional<double> lo;
  std::optional<double> hi;
};

/// Moment-matched baseline: geometric/exponential from the sample mean,
/// normal from mean and population variance (divisor n), uniform from
/// bounds, equiprobable from the distinct labels or values.
BaselineSpec fit_baseline(const Dataset& data, BaselineFamily family, const FitOptions& options = {});

}  // namespace activeinfo::cli
