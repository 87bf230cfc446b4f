#include "activeinfo/dominance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "activeinfo/active_info.hpp"
#include "activeinfo/error.hpp"

namespace activeinfo {
namespace {

constexpr double kContinuousSlack = 1e-12;

std::string num(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

double mixture_quantile(const Distribution& a, const Distribution& b, double u) {
  double lo = std::min(quantile(a, u), quantile(b, u));
  double hi = std::max(quantile(a, u), quantile(b, u));
  auto mix = [&](double x) { return 0.5 * (cdf(a, x) + cdf(b, x)); };
  for (int it = 0; it < 200 && lo < hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mix(mid) < u ? lo : hi) = mid;
  }
  return hi;
}

void append_atoms(const Distribution& d, std::vector<double>& out) {
  if (const FiniteSupport* s = d.finite_support()) {
    auto pts = s->points();
    out.insert(out.end(), pts.begin(), pts.end());
  }
}

}  // namespace

GridSpec GridSpec::automatic(std::size_t count, double tail) {
  if (count < 2) throw InvalidParameter("automatic grid needs at least 2 points");
  if (!(tail > 0.0 && tail < 0.5)) throw InvalidParameter("grid tail must lie in (0, 0.5)");
  GridSpec g;
  g.count_ = count;
  g.tail_ = tail;
  return g;
}

GridSpec GridSpec::uniform(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi >= lo)) {
    throw InvalidParameter("grid needs finite lo <= hi");
  }
  if (!std::isfinite(step) || !(step > 0.0)) throw InvalidParameter("grid step must be > 0");
  GridSpec g;
  g.automatic_ = false;
  g.lo_ = lo;
  g.hi_ = hi;
  g.step_ = step;
  return g;
}

std::vector<double> GridSpec::points(const Distribution& a, const Distribution& b) const {
  std::vector<double> out;
  if (automatic_) {
    out.reserve(count_);
    for (std::size_t j = 0; j < count_; ++j) {
      const double u = tail_ + (1.0 - 2.0 * tail_) * static_cast<double>(j) /
                                   static_cast<double>(count_ - 1);
      out.push_back(mixture_quantile(a, b, u));
    }
  } else {
    const auto steps = static_cast<std::size_t>(std::floor((hi_ - lo_) / step_ + 1e-9));
    out.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) out.push_back(lo_ + static_cast<double>(i) * step_);
  }
  return out;
}

std::string GridSpec::describe() const {
  if (automatic_) {
    return "quantile grid, " + std::to_string(count_) + " points, tails " + num(tail_);
  }
  return "uniform grid [" + num(lo_) + ", " + num(hi_) + "] step " + num(step_);
}

std::vector<double> evaluation_points(const Distribution& phi, const Distribution& varphi,
                                      const GridSpec& grid) {
  std::vector<double> pts;
  append_atoms(phi, pts);
  append_atoms(varphi, pts);
  if (!(phi.is_finite() && varphi.is_finite())) {
    auto g = grid.points(phi, varphi);
    pts.insert(pts.end(), g.begin(), g.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

DominanceReport is_dominated(const Distribution& phi, const Distribution& varphi,
                             const GridSpec& grid) {
  const auto* e_phi = std::get_if<Exponential>(&phi.variant());
  const auto* e_varphi = std::get_if<Exponential>(&varphi.variant());
  if (e_phi && e_varphi && grid.is_automatic()) {
    // F_phi >= F_varphi everywhere iff phi's rate is at least varphi's.
    DominanceReport r;
    r.grid = "analytic: exponential rate ordering";
    r.dominated = e_phi->mean() <= e_varphi->mean();
    if (!r.dominated) r.witness = e_phi->mean();
    return r;
  }

  const bool exact = phi.is_finite() && varphi.is_finite();
  DominanceReport r;
  r.grid = exact ? "all atoms" : grid.describe();
  const auto pts = evaluation_points(phi, varphi, grid);
  r.checked_points = pts.size();
  const double slack = exact ? 0.0 : kContinuousSlack;
  for (double x : pts) {
    if (cdf(phi, x) < cdf(varphi, x) - slack) {
      r.dominated = false;
      r.witness = x;
      break;
    }
  }
  return r;
}

bool verify_dominance_lemma(const Distribution& phi, const Distribution& varphi,
                            const GridSpec& grid, InfoUnit unit) {
  for (double x : evaluation_points(phi, varphi, grid)) {
    const Target below = Target::at_most(x);
    const double f_phi = probability(phi, below);
    const double f_varphi = probability(varphi, below);
    if (f_varphi == 0.0) continue;  // vacuous, or log ratio undefined

    const bool cdf_side = f_phi >= f_varphi;
    const bool info_side = active_information(phi, varphi, below, unit).active >= 0.0;
    if (cdf_side != info_side) return false;

    if (cdf_side) {
      const Target above = Target::greater_than(x);
      if (probability(varphi, above) > 0.0 &&
          active_information(phi, varphi, above, unit).active > 0.0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace activeinfo
