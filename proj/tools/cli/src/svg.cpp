#include "activeinfo/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "activeinfo/cli/format.hpp"
#include "activeinfo/error.hpp"

namespace activeinfo::cli {
namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 200, kTop = 40, kBottom = 60;
constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string f2(double v) { return format_fixed(v, 2); }

// 1-2-5 tick step giving roughly `target` intervals.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

int decimals_for(double step) { return std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9))); }

}  // namespace

CdfCurve sample_cdf(const Distribution& d, const std::vector<double>& xs) {
  CdfCurve c;
  c.label = describe(d);
  c.x = xs;
  c.y.reserve(xs.size());
  for (double x : xs) c.y.push_back(cdf(d, x));
  c.step = d.is_finite();
  return c;
}

std::string render_cdf_svg(const std::vector<CdfCurve>& curves, const std::string& title) {
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& c : curves) {
    if (c.x.size() != c.y.size()) throw InvalidParameter("curve has mismatched x/y lengths");
    for (double x : c.x) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (!(hi > lo)) throw InvalidParameter("plot needs at least two distinct x values");

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - lo) / (hi - lo) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - y) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  s += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  s += "<text x=\"" + f2(kLeft + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
       escape(title) + "</text>\n";

  // Axes and ticks.
  s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<line x1=\"" + f2(kLeft) + "\" y1=\"" + f2(kTop + ph) + "\" x2=\"" + f2(kLeft + pw) + "\" y2=\"" + f2(kTop + ph) + "\"/>\n";
  s += "<line x1=\"" + f2(kLeft) + "\" y1=\"" + f2(kTop) + "\" x2=\"" + f2(kLeft) + "\" y2=\"" + f2(kTop + ph) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  const double xstep = nice_step(hi - lo, 8);
  const int xdec = decimals_for(xstep);
  for (double k = std::ceil(lo / xstep - 1e-9); k * xstep <= hi + 1e-9 * xstep; k += 1.0) {
    const double x = k * xstep;
    s += "<line x1=\"" + f2(px(x)) + "\" y1=\"" + f2(kTop + ph) + "\" x2=\"" + f2(px(x)) + "\" y2=\"" +
         f2(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + f2(px(x)) + "\" y=\"" + f2(kTop + ph + 20) + "\" text-anchor=\"middle\">" +
         format_fixed(x, xdec) + "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double y = k * 0.25;
    s += "<line x1=\"" + f2(kLeft - 5) + "\" y1=\"" + f2(py(y)) + "\" x2=\"" + f2(kLeft) + "\" y2=\"" + f2(py(y)) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + f2(kLeft - 8) + "\" y=\"" + f2(py(y) + 4) + "\" text-anchor=\"end\">" + format_fixed(y, 2) +
         "</text>\n";
  }
  s += "<text x=\"" + f2(kLeft + pw / 2) + "\" y=\"" + f2(kHeight - 15) + "\" text-anchor=\"middle\">x</text>\n";
  s += "<text x=\"20\" y=\"" + f2(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
       f2(kTop + ph / 2) + ")\">F(x)</text>\n";
  s += "</g>\n";

  // Curves.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const char* color = kPalette[i % kPalette.size()];
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"";
    for (std::size_t j = 0; j < c.x.size(); ++j) {
      if (j) s += ' ';
      if (c.step && j) s += f2(px(c.x[j])) + "," + f2(py(c.y[j - 1])) + ' ';
      s += f2(px(c.x[j])) + "," + f2(py(c.y[j]));
    }
    s += "\"/>\n";
  }

  // Legend.
  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(i);
    const double x = kLeft + pw + 15;
    s += "<line x1=\"" + f2(x) + "\" y1=\"" + f2(y) + "\" x2=\"" + f2(x + 20) + "\" y2=\"" + f2(y) + "\" stroke=\"" +
         kPalette[i % kPalette.size()] + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + f2(x + 26) + "\" y=\"" + f2(y + 4) + "\">" + escape(curves[i].label) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace activeinfo::cli
