#pragma once

#include "activeinfo/distributions.hpp"
#include "activeinfo/support.hpp"
#include "activeinfo/target.hpp"
#include "activeinfo/units.hpp"

namespace activeinfo {

/// Result of an active-information query at a target T.
///
/// endogenous = -log baseline(T), exogenous = -log alternative(T),
/// active = log(alternative(T) / baseline(T)). Infinite values are regular
/// results: exogenous is +inf and active is -inf when alternative(T) == 0.
struct InfoReport {
  double endogenous = 0.0;
  double exogenous = 0.0;
  double active = 0.0;
  InfoUnit unit = kDefaultUnit;
  double baseline_prob = 1.0;
  double alternative_prob = 1.0;
};

/// Re-expresses every information field in another unit.
InfoReport convert(const InfoReport& report, InfoUnit unit);

/// -log baseline(T); +inf when baseline(T) == 0.
double endogenous_information(const Distribution& baseline, const Target& target,
                              InfoUnit unit = kDefaultUnit);

/// Active information from already-evaluated target probabilities.
/// Throws UndefinedBaseline when baseline_prob == 0.
InfoReport active_information(double alternative_prob, double baseline_prob,
                              InfoUnit unit = kDefaultUnit);

/// Throws UndefinedBaseline when baseline(T) == 0.
InfoReport active_information(const Distribution& alternative, const Distribution& baseline,
                              const Target& target, InfoUnit unit = kDefaultUnit);

/// sum_i p_i log(p_i / q_i); 0 log(0/q) = 0, +inf if p_i > 0 where q_i == 0.
/// Equals the p-weighted average of the singleton active information of p
/// over baseline q. Throws SupportMismatch unless p and q share a support.
double kl_divergence(const Pmf& p, const Pmf& q, InfoUnit unit = kDefaultUnit);

/// Squared Euclidean distance to equiprobability: sum_i (p_i - 1/n)^2.
double disequilibrium_euclidean(const Pmf& p);

/// Wootters statistical distance to equiprobability, arccos(sum_i sqrt(p_i / n)), radians.
double disequilibrium_wootters(const Pmf& p);

}  // namespace activeinfo
