#include "activeinfo/distributions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "activeinfo/error.hpp"

namespace activeinfo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string num(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::optional<double> parse_number(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Uniform access to the two finite representations.
struct FiniteView {
  const FiniteSupport& support;
  const Pmf* pmf;  // nullptr means equiprobable

  std::size_t n() const { return support.size(); }
  double mass(std::size_t i) const {
    return pmf ? pmf->mass(i) : 1.0 / static_cast<double>(n());
  }
  double cumulative(std::size_t k) const {
    if (pmf) return pmf->cumulative(k);
    return static_cast<double>(k) / static_cast<double>(n());
  }
};

std::optional<FiniteView> finite_view(const Distribution& d) {
  if (const auto* e = std::get_if<Equiprobable>(&d.variant())) return FiniteView{e->support(), nullptr};
  if (const auto* p = std::get_if<Pmf>(&d.variant())) return FiniteView{p->support(), p};
  return std::nullopt;
}

// Index range [first, last) of ordered atoms inside the interval.
std::pair<std::size_t, std::size_t> atom_range(const FiniteSupport& s, const Interval& i) {
  std::size_t first = 0;
  std::size_t last = s.size();
  if (i.lo != -kInf) first = s.count_at_most(i.lo, !i.lo_closed);
  if (i.hi != kInf) last = s.count_at_most(i.hi, i.hi_closed);
  if (last < first) last = first;
  return {first, last};
}

double finite_probability(const FiniteView& v, const Target& t) {
  const auto parts = leaves(t);
  if (t.is_atom_set()) {
    std::set<std::size_t> all;
    for (const Target* part : parts) {
      std::set<std::size_t> own;
      for (const auto& label : std::get<FiniteSubset>(part->kind()).atoms) {
        auto idx = v.support.find(label);
        if (!idx) throw SupportMismatch("atom '" + label + "' is not in the support");
        own.insert(*idx);
      }
      for (std::size_t i : own) {
        if (!all.insert(i).second) {
          throw InvalidTarget("union parts overlap at atom '" + v.support.labels()[i] + "'");
        }
      }
    }
    if (!v.pmf) return static_cast<double>(all.size()) / static_cast<double>(v.n());
    double total = 0.0;
    for (std::size_t i : all) total += v.mass(i);
    return total;
  }
  if (!v.support.is_ordered()) {
    throw SupportMismatch("real-set target needs a support with real-valued atoms");
  }
  double total = 0.0;
  std::size_t covered = 0;
  for (const Target* part : parts) {
    auto [first, last] = atom_range(v.support, as_interval(*part));
    total += v.cumulative(last) - v.cumulative(first);
    covered += last - first;
  }
  if (covered > v.n()) throw InvalidTarget("union parts overlap");
  return total;
}

// Geometric: P(kmin <= X <= kmax) on {1, 2, ...}.
double geometric_range(const Geometric& g, double kmin, double kmax) {
  kmin = std::max(kmin, 1.0);
  if (kmax < kmin) return 0.0;
  const double p = g.success_probability();
  if (p >= 1.0) return kmin <= 1.0 ? 1.0 : 0.0;
  const double log_q = std::log1p(-p);
  const double head = std::exp((kmin - 1.0) * log_q);
  if (kmax == kInf) return head;
  return head * -std::expm1((kmax - kmin + 1.0) * log_q);
}

double geometric_probability(const Geometric& g, const Target& t) {
  const auto parts = leaves(t);
  if (t.is_atom_set()) {
    std::set<double> all;
    for (const Target* part : parts) {
      std::set<double> own;
      for (const auto& label : std::get<FiniteSubset>(part->kind()).atoms) {
        auto value = parse_number(label);
        if (!value) throw SupportMismatch("atom '" + label + "' is not an integer point");
        own.insert(*value);
      }
      for (double x : own) {
        if (!all.insert(x).second) throw InvalidTarget("union parts overlap at atom '" + num(x) + "'");
      }
    }
    double total = 0.0;
    for (double x : all) {
      if (x >= 1.0 && std::floor(x) == x) total += geometric_range(g, x, x);
    }
    return total;
  }
  double total = 0.0;
  for (const Target* part : parts) {
    Interval i = as_interval(*part);
    double kmin = i.lo == -kInf ? 1.0 : (i.lo_closed ? std::ceil(i.lo) : std::floor(i.lo) + 1.0);
    double kmax = i.hi == kInf ? kInf : (i.hi_closed ? std::floor(i.hi) : std::ceil(i.hi) - 1.0);
    total += geometric_range(g, kmin, kmax);
  }
  return total;
}

double continuous_median(const Distribution& d) {
  return std::visit(Overloaded{
                        [](const UniformInterval& u) { return 0.5 * (u.a() + u.b()); },
                        [](const Exponential& e) { return e.mean() * std::numbers::ln2; },
                        [](const Normal& n) { return n.mean(); },
                        [](const auto&) { return 0.0; },
                    },
                    d.variant());
}

double continuous_probability(const Distribution& d, const Target& t) {
  if (!t.is_real_set()) throw SupportMismatch("atom-set target against a continuous distribution");
  const double median = continuous_median(d);
  double total = 0.0;
  for (const Target* part : leaves(t)) {
    Interval i = as_interval(*part);
    // Subtract in whichever tail keeps the operands small.
    if (i.lo >= median) {
      total += survival(d, i.lo) - survival(d, i.hi);
    } else {
      total += cdf(d, i.hi) - cdf(d, i.lo);
    }
  }
  return total;
}

double normal_cdf(const Normal& n, double x) {
  if (x == -kInf) return 0.0;
  if (x == kInf) return 1.0;
  return 0.5 * std::erfc(-(x - n.mean()) / (n.stddev() * std::numbers::sqrt2));
}

double normal_survival(const Normal& n, double x) {
  if (x == -kInf) return 1.0;
  if (x == kInf) return 0.0;
  return 0.5 * std::erfc((x - n.mean()) / (n.stddev() * std::numbers::sqrt2));
}

}  // namespace

Equiprobable::Equiprobable(std::size_t n) : support_(FiniteSupport::indexed(n)) {}
Equiprobable::Equiprobable(FiniteSupport support) : support_(std::move(support)) {}

UniformInterval::UniformInterval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw InvalidParameter("uniform interval needs finite a < b");
  }
}

Geometric::Geometric(double mu) : mu_(mu) {
  if (!std::isfinite(mu) || !(mu >= 1.0)) throw InvalidParameter("geometric mean must be >= 1");
}

Exponential::Exponential(double mu) : mu_(mu) {
  if (!std::isfinite(mu) || !(mu > 0.0)) throw InvalidParameter("exponential mean must be > 0");
}

Normal::Normal(double mu, double sigma2) : mu_(mu), sigma2_(sigma2) {
  if (!std::isfinite(mu)) throw InvalidParameter("normal mean must be finite");
  if (!std::isfinite(sigma2) || !(sigma2 > 0.0)) throw InvalidParameter("normal variance must be > 0");
}

double Normal::stddev() const noexcept { return std::sqrt(sigma2_); }

Distribution::Distribution(const BaselineSpec& b)
    : v_(std::visit([](const auto& d) -> Variant { return d; }, b)) {}

bool Distribution::is_finite() const noexcept {
  return std::holds_alternative<Equiprobable>(v_) || std::holds_alternative<Pmf>(v_);
}

bool Distribution::is_continuous() const noexcept {
  return std::holds_alternative<UniformInterval>(v_) || std::holds_alternative<Exponential>(v_) ||
         std::holds_alternative<Normal>(v_);
}

const FiniteSupport* Distribution::finite_support() const noexcept {
  if (const auto* e = std::get_if<Equiprobable>(&v_)) return &e->support();
  if (const auto* p = std::get_if<Pmf>(&v_)) return &p->support();
  return nullptr;
}

double probability(const Distribution& d, const Target& t) {
  double p = 0.0;
  if (auto v = finite_view(d)) {
    p = finite_probability(*v, t);
  } else if (const auto* g = std::get_if<Geometric>(&d.variant())) {
    p = geometric_probability(*g, t);
  } else {
    p = continuous_probability(d, t);
  }
  // Summed masses can land an ulp outside [0, 1].
  return std::clamp(p, 0.0, 1.0);
}

double cdf(const Distribution& d, double x) {
  if (std::isnan(x)) throw InvalidParameter("cdf argument is NaN");
  return std::visit(
      Overloaded{
          [x](const Equiprobable& e) {
            return static_cast<double>(e.support().count_at_most(x)) / static_cast<double>(e.n());
          },
          [x](const Pmf& p) { return p.cumulative(p.support().count_at_most(x)); },
          [x](const UniformInterval& u) {
            if (x <= u.a()) return 0.0;
            if (x >= u.b()) return 1.0;
            return (x - u.a()) / (u.b() - u.a());
          },
          [x](const Geometric& g) {
            if (x < 1.0) return 0.0;
            if (x == kInf) return 1.0;
            return geometric_range(g, 1.0, std::floor(x));
          },
          [x](const Exponential& e) { return x <= 0.0 ? 0.0 : -std::expm1(-x / e.mean()); },
          [x](const Normal& n) { return normal_cdf(n, x); },
      },
      d.variant());
}

double survival(const Distribution& d, double x) {
  if (std::isnan(x)) throw InvalidParameter("survival argument is NaN");
  return std::visit(
      Overloaded{
          [&d, x](const Equiprobable&) { return 1.0 - cdf(d, x); },
          [&d, x](const Pmf&) { return 1.0 - cdf(d, x); },
          [x](const UniformInterval& u) {
            if (x <= u.a()) return 1.0;
            if (x >= u.b()) return 0.0;
            return (u.b() - x) / (u.b() - u.a());
          },
          [x](const Geometric& g) {
            if (x < 1.0) return 1.0;
            return geometric_range(g, std::floor(x) + 1.0, kInf);
          },
          [x](const Exponential& e) { return x <= 0.0 ? 1.0 : std::exp(-x / e.mean()); },
          [x](const Normal& n) { return normal_survival(n, x); },
      },
      d.variant());
}

double quantile(const Distribution& d, double u) {
  if (!(u > 0.0 && u < 1.0)) throw InvalidParameter("quantile level must lie in (0, 1)");
  if (const FiniteSupport* s = d.finite_support()) {
    auto pts = s->points();
    for (double x : pts) {
      if (cdf(d, x) >= u) return x;
    }
    return pts.back();
  }
  return std::visit(
      Overloaded{
          [u](const UniformInterval& un) { return un.a() + u * (un.b() - un.a()); },
          [u](const Exponential& e) { return -e.mean() * std::log1p(-u); },
          [&d, u](const Geometric& g) {
            const double p = g.success_probability();
            if (p >= 1.0) return 1.0;
            double k = std::max(1.0, std::ceil(std::log1p(-u) / std::log1p(-p)));
            while (k > 1.0 && cdf(d, k - 1.0) >= u) k -= 1.0;
            while (cdf(d, k) < u) k += 1.0;
            return k;
          },
          [u](const Normal& n) {
            double lo = n.mean() - 40.0 * n.stddev();
            double hi = n.mean() + 40.0 * n.stddev();
            for (int it = 0; it < 200; ++it) {
              double mid = 0.5 * (lo + hi);
              if (mid == lo || mid == hi) break;
              (normal_cdf(n, mid) < u ? lo : hi) = mid;
            }
            return hi;
          },
          [](const auto&) { return 0.0; },
      },
      d.variant());
}

double density(const Distribution& d, double x) {
  return std::visit(
      Overloaded{
          [x](const Equiprobable& e) {
            auto pts = e.support().points();
            return std::binary_search(pts.begin(), pts.end(), x) ? 1.0 / static_cast<double>(e.n())
                                                                 : 0.0;
          },
          [x](const Pmf& p) {
            auto pts = p.support().points();
            auto it = std::lower_bound(pts.begin(), pts.end(), x);
            if (it == pts.end() || *it != x) return 0.0;
            return p.mass(static_cast<std::size_t>(it - pts.begin()));
          },
          [x](const UniformInterval& u) {
            return (x >= u.a() && x <= u.b()) ? 1.0 / (u.b() - u.a()) : 0.0;
          },
          [x](const Geometric& g) {
            if (x < 1.0 || std::floor(x) != x) return 0.0;
            return geometric_range(g, x, x);
          },
          [x](const Exponential& e) { return x < 0.0 ? 0.0 : std::exp(-x / e.mean()) / e.mean(); },
          [x](const Normal& n) { return normal_density(x, n.mean(), n.variance()); },
      },
      d.variant());
}

double normal_density(double x, double mu, double sigma2) {
  const double z = x - mu;
  return std::exp(-z * z / (2.0 * sigma2)) / std::sqrt(2.0 * std::numbers::pi * sigma2);
}

double entropy(const BaselineSpec& b, InfoUnit unit) {
  return std::visit(
      Overloaded{
          [unit](const Equiprobable& e) { return log_in(unit, static_cast<double>(e.n())); },
          [unit](const UniformInterval& u) { return log_in(unit, u.b() - u.a()); },
          [unit](const Geometric& g) {
            const double p = g.success_probability();
            if (p >= 1.0) return 0.0;
            const double q = 1.0 - p;
            const double nats = (-q * std::log(q) - p * std::log(p)) / p;
            return convert(nats, InfoUnit::Nats, unit);
          },
          [unit](const Exponential& e) {
            return convert(1.0 + std::log(e.mean()), InfoUnit::Nats, unit);
          },
          [unit](const Normal& n) {
            const double nats = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * n.variance());
            return convert(nats, InfoUnit::Nats, unit);
          },
      },
      b);
}

std::string describe(const Distribution& d) {
  return std::visit(
      Overloaded{
          [](const Equiprobable& e) { return "Equiprobable(n=" + std::to_string(e.n()) + ")"; },
          [](const UniformInterval& u) { return "U(a=" + num(u.a()) + ", b=" + num(u.b()) + ")"; },
          [](const Geometric& g) { return "Geom(mu=" + num(g.mean()) + ")"; },
          [](const Exponential& e) { return "Exp(rate=" + num(e.rate()) + ")"; },
          [](const Normal& n) {
            return "N(mu=" + num(n.mean()) + ", sigma2=" + num(n.variance()) + ")";
          },
          [](const Pmf& p) { return "Pmf(n=" + std::to_string(p.size()) + ")"; },
      },
      d.variant());
}

}  // namespace activeinfo
