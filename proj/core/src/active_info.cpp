#include "activeinfo/active_info.hpp"

#include <cmath>
#include <limits>

#include "activeinfo/error.hpp"

namespace activeinfo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double neg_log(InfoUnit unit, double prob) { return prob > 0.0 ? -log_in(unit, prob) : kInf; }

}  // namespace

InfoReport convert(const InfoReport& report, InfoUnit unit) {
  InfoReport out = report;
  out.endogenous = convert(report.endogenous, report.unit, unit);
  out.exogenous = convert(report.exogenous, report.unit, unit);
  out.active = convert(report.active, report.unit, unit);
  out.unit = unit;
  return out;
}

double endogenous_information(const Distribution& baseline, const Target& target, InfoUnit unit) {
  return neg_log(unit, probability(baseline, target));
}

InfoReport active_information(double alternative_prob, double baseline_prob, InfoUnit unit) {
  if (std::isnan(alternative_prob) || alternative_prob < 0.0 || alternative_prob > 1.0 ||
      std::isnan(baseline_prob) || baseline_prob < 0.0 || baseline_prob > 1.0) {
    throw InvalidParameter("target probabilities must lie in [0, 1]");
  }
  if (!(baseline_prob > 0.0)) {
    throw UndefinedBaseline("baseline assigns zero probability to the target");
  }
  InfoReport r;
  r.unit = unit;
  r.baseline_prob = baseline_prob;
  r.alternative_prob = alternative_prob;
  r.endogenous = neg_log(unit, baseline_prob);
  r.exogenous = neg_log(unit, alternative_prob);
  // alt >= base: the difference form cannot exceed endogenous and stays >= 0
  // because log is monotone. alt < base: the ratio rounds to a value < 1, so
  // the log ratio is strictly negative even when the two logs would collide.
  if (alternative_prob >= baseline_prob) {
    r.active = r.endogenous - r.exogenous;
  } else {
    r.active = log_in(unit, alternative_prob / baseline_prob);
  }
  return r;
}

InfoReport active_information(const Distribution& alternative, const Distribution& baseline,
                              const Target& target, InfoUnit unit) {
  const double base = probability(baseline, target);
  const double alt = probability(alternative, target);
  return active_information(alt, base, unit);
}

double kl_divergence(const Pmf& p, const Pmf& q, InfoUnit unit) {
  if (!(p.support() == q.support())) throw SupportMismatch("KL divergence needs a shared support");
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.mass(i);
    const double qi = q.mass(i);
    if (pi == 0.0) continue;
    if (qi == 0.0) return kInf;
    if (pi != qi) total += pi * log_in(unit, pi / qi);
  }
  return total;
}

double disequilibrium_euclidean(const Pmf& p) {
  const double uniform = 1.0 / static_cast<double>(p.size());
  double total = 0.0;
  for (double m : p.masses()) total += (m - uniform) * (m - uniform);
  return total;
}

double disequilibrium_wootters(const Pmf& p) {
  // arccos(B) with B = sum sqrt(p_i q_i) rewritten through the Hellinger
  // identity 1 - B = (1/2) sum (sqrt p_i - sqrt q_i)^2, which is exact at
  // equiprobability and well conditioned near it.
  const double root_uniform = std::sqrt(1.0 / static_cast<double>(p.size()));
  double hellinger_sq = 0.0;
  for (double m : p.masses()) {
    const double d = std::sqrt(m) - root_uniform;
    hellinger_sq += d * d;
  }
  hellinger_sq *= 0.5;
  // 1 - cos(theta) = 2 sin^2(theta / 2) = H^2.
  const double half_chord = std::min(1.0, std::sqrt(0.5 * hellinger_sq));
  return 2.0 * std::asin(half_chord);
}

}  // namespace activeinfo
