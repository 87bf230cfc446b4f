#include "activeinfo/support.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "activeinfo/error.hpp"

namespace activeinfo {
namespace {

std::string shortest_label(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::optional<double> parse_number(std::string_view s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

FiniteSupport FiniteSupport::indexed(std::size_t n) {
  if (n == 0) throw InvalidParameter("finite support needs at least one atom");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labeled(std::move(labels));
}

FiniteSupport FiniteSupport::labeled(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidParameter("finite support needs at least one atom");
  FiniteSupport s;
  s.labels_ = std::move(labels);
  s.build_index();
  for (std::size_t i = 1; i < s.by_label_.size(); ++i) {
    if (s.labels_[s.by_label_[i]] == s.labels_[s.by_label_[i - 1]]) {
      throw InvalidParameter("duplicate atom label '" + s.labels_[s.by_label_[i]] + "'");
    }
  }
  return s;
}

FiniteSupport FiniteSupport::ordered(std::vector<double> points) {
  if (points.empty()) throw InvalidParameter("finite support needs at least one atom");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) throw InvalidParameter("support point is not finite");
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw InvalidParameter("support points must be strictly increasing (at index " +
                             std::to_string(i) + ")");
    }
  }
  FiniteSupport s;
  s.labels_.reserve(points.size());
  for (double x : points) s.labels_.push_back(shortest_label(x));
  s.points_ = std::move(points);
  s.build_index();
  return s;
}

void FiniteSupport::build_index() {
  by_label_.resize(labels_.size());
  std::iota(by_label_.begin(), by_label_.end(), std::size_t{0});
  std::sort(by_label_.begin(), by_label_.end(),
            [this](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
}

std::span<const double> FiniteSupport::points() const {
  if (!points_) throw UnorderableSupport("support atoms are opaque labels with no ordering");
  return *points_;
}

std::optional<std::size_t> FiniteSupport::find(std::string_view label) const {
  if (points_) {
    auto value = parse_number(label);
    if (!value) return std::nullopt;
    auto it = std::lower_bound(points_->begin(), points_->end(), *value);
    if (it == points_->end() || *it != *value) return std::nullopt;
    return static_cast<std::size_t>(it - points_->begin());
  }
  auto it = std::lower_bound(by_label_.begin(), by_label_.end(), label,
                             [this](std::size_t i, std::string_view l) { return labels_[i] < l; });
  if (it == by_label_.end() || labels_[*it] != label) return std::nullopt;
  return *it;
}

std::size_t FiniteSupport::count_at_most(double x, bool inclusive) const {
  auto pts = points();
  auto it = inclusive ? std::upper_bound(pts.begin(), pts.end(), x)
                      : std::lower_bound(pts.begin(), pts.end(), x);
  return static_cast<std::size_t>(it - pts.begin());
}

bool operator==(const FiniteSupport& a, const FiniteSupport& b) {
  return a.labels_ == b.labels_ && a.points_ == b.points_;
}

Pmf::Pmf(FiniteSupport support, std::vector<double> masses)
    : support_(std::move(support)), masses_(std::move(masses)) {
  if (masses_.size() != support_.size()) {
    throw InvalidParameter("pmf has " + std::to_string(masses_.size()) + " masses for " +
                           std::to_string(support_.size()) + " atoms");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!std::isfinite(masses_[i]) || masses_[i] < 0.0) {
      throw InvalidParameter("pmf mass at index " + std::to_string(i) +
                             " is negative or not finite");
    }
    total += masses_[i];
  }
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    throw InvalidParameter("pmf masses sum to " + std::to_string(total) + ", expected 1");
  }
  cumulative_.resize(masses_.size() + 1);
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    cumulative_[i + 1] = std::min(cumulative_[i] + masses_[i], 1.0);
  }
  cumulative_.back() = 1.0;
}

Pmf Pmf::over_points(std::vector<double> points, std::vector<double> masses) {
  return Pmf(FiniteSupport::ordered(std::move(points)), std::move(masses));
}

Pmf Pmf::over_labels(std::vector<std::string> labels, std::vector<double> masses) {
  return Pmf(FiniteSupport::labeled(std::move(labels)), std::move(masses));
}

Pmf Pmf::equiprobable(FiniteSupport support) {
  const double each = 1.0 / static_cast<double>(support.size());
  std::vector<double> masses(support.size(), each);
  return Pmf(std::move(support), std::move(masses));
}

}  // namespace activeinfo
