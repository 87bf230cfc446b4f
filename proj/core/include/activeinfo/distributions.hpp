#pragma once

#include <string>
#include <variant>

#include "activeinfo/support.hpp"
#include "activeinfo/target.hpp"
#include "activeinfo/units.hpp"

namespace activeinfo {

// Maximum-entropy baseline families. Each validates its parameters on
// construction and is an immutable value afterwards.

/// Equiprobability over a finite set of atoms. Atoms are opaque unless the
/// support was built with real points.
class Equiprobable {
 public:
  explicit Equiprobable(std::size_t n);
  explicit Equiprobable(FiniteSupport support);

  std::size_t n() const noexcept { return support_.size(); }
  const FiniteSupport& support() const noexcept { return support_; }

  friend bool operator==(const Equiprobable&, const Equiprobable&) = default;

 private:
  FiniteSupport support_;
};

/// Uniform on [a, b], b > a.
class UniformInterval {
 public:
  UniformInterval(double a, double b);
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  friend bool operator==(const UniformInterval&, const UniformInterval&) = default;

 private:
  double a_;
  double b_;
};

/// Geometric on {1, 2, ...} with mean mu >= 1: P(X = k) = (1-p)^(k-1) p, p = 1/mu.
class Geometric {
 public:
  explicit Geometric(double mu);
  double mean() const noexcept { return mu_; }
  double success_probability() const noexcept { return 1.0 / mu_; }
  friend bool operator==(const Geometric&, const Geometric&) = default;

 private:
  double mu_;
};

/// Exponential on [0, inf) with mean mu > 0 (rate 1/mu).
class Exponential {
 public:
  explicit Exponential(double mu);
  double mean() const noexcept { return mu_; }
  double rate() const noexcept { return 1.0 / mu_; }
  friend bool operator==(const Exponential&, const Exponential&) = default;

 private:
  double mu_;
};

/// Normal with mean mu and variance sigma2 > 0.
class Normal {
 public:
  Normal(double mu, double sigma2);
  double mean() const noexcept { return mu_; }
  double variance() const noexcept { return sigma2_; }
  double stddev() const noexcept;
  friend bool operator==(const Normal&, const Normal&) = default;

 private:
  double mu_;
  double sigma2_;
};

using BaselineSpec = std::variant<Equiprobable, UniformInterval, Geometric, Exponential, Normal>;

/// Anything a target probability can be evaluated under: a baseline family
/// or an explicit finite Pmf.
class Distribution {
 public:
  using Variant =
      std::variant<Equiprobable, UniformInterval, Geometric, Exponential, Normal, Pmf>;

  Distribution(Equiprobable d) : v_(std::move(d)) {}
  Distribution(UniformInterval d) : v_(d) {}
  Distribution(Geometric d) : v_(d) {}
  Distribution(Exponential d) : v_(d) {}
  Distribution(Normal d) : v_(d) {}
  Distribution(Pmf d) : v_(std::move(d)) {}
  Distribution(const BaselineSpec& b);

  const Variant& variant() const noexcept { return v_; }

  /// Equiprobable or Pmf.
  bool is_finite() const noexcept;
  /// UniformInterval, Exponential or Normal.
  bool is_continuous() const noexcept;
  /// Support atoms for finite distributions, nullptr otherwise.
  const FiniteSupport* finite_support() const noexcept;

 private:
  Variant v_;
};

/// Exact measure of the target. Throws SupportMismatch when the target kind
/// does not apply to the distribution, InvalidTarget on overlapping parts.
double probability(const Distribution& d, const Target& t);

/// P(X <= x). Finite distributions need a real ordering (UnorderableSupport otherwise).
double cdf(const Distribution& d, double x);

/// P(X > x), computed so that cdf + survival == 1 up to rounding, and
/// exactly 1 - cdf for finite distributions.
double survival(const Distribution& d, double x);

/// Smallest x with cdf(x) >= u, for u in (0, 1).
double quantile(const Distribution& d, double u);

/// Density for continuous families, mass for discrete ones.
double density(const Distribution& d, double x);

/// Shannon entropy (discrete families) or differential entropy (continuous).
double entropy(const BaselineSpec& b, InfoUnit unit = kDefaultUnit);

double normal_density(double x, double mu, double sigma2);

/// Short human-readable name with parameters, e.g. "Exp(rate=0.5)".
std::string describe(const Distribution& d);

}  // namespace activeinfo
