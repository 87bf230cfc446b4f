#pragma once

#include <string>
#include <vector>

#include "activeinfo/distributions.hpp"

namespace activeinfo::cli {

struct CdfCurve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool step = false;  // right-continuous staircase (finite distributions)
};

/// CDF of `d` at each of `xs` (ascending), labelled with describe(d).
CdfCurve sample_cdf(const Distribution& d, const std::vector<double>& xs);

/// Self-contained 800x500 SVG with axes, ticks and a legend. Coordinates are
/// printed with two decimals so the output is byte-stable.
std::string render_cdf_svg(const std::vector<CdfCurve>& curves, const std::string& title);

}  // namespace activeinfo::cli
