#include "activeinfo/target.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "activeinfo/error.hpp"

namespace activeinfo {
namespace {

void collect(const Target& t, std::vector<const Target*>& out) {
  if (const auto* u = std::get_if<UnionOf>(&t.kind())) {
    for (const auto& p : u->parts) collect(p, out);
  } else {
    out.push_back(&t);
  }
}

bool is_empty(const Interval& i) {
  if (i.lo < i.hi) return false;
  return !(i.lo == i.hi && i.lo_closed && i.hi_closed);
}

bool intersects(const Interval& a, const Interval& b) {
  if (is_empty(a) || is_empty(b)) return false;
  double lo = std::max(a.lo, b.lo);
  double hi = std::min(a.hi, b.hi);
  if (lo < hi) return true;
  if (lo > hi) return false;
  // Single shared point: it must be included by both.
  auto contains = [lo](const Interval& i) {
    bool lo_ok = i.lo < lo || (i.lo == lo && i.lo_closed);
    bool hi_ok = i.hi > lo || (i.hi == lo && i.hi_closed);
    return lo_ok && hi_ok;
  };
  return contains(a) && contains(b);
}

}  // namespace

Target::Target(FiniteSubset s) : kind_(std::move(s)) {}

Target::Target(Interval i) : kind_(i) {
  if (std::isnan(i.lo) || std::isnan(i.hi)) throw InvalidTarget("interval endpoint is NaN");
  if (i.lo > i.hi) throw InvalidTarget("interval requires lo <= hi");
}

Target::Target(HalfLineLeq h) : kind_(h) {
  if (std::isnan(h.x)) throw InvalidTarget("half-line endpoint is NaN");
}

Target::Target(UnionOf u) : kind_(std::move(u)) {
  auto parts = leaves(*this);
  bool any_atoms = false;
  bool any_reals = false;
  for (const Target* p : parts) {
    if (std::holds_alternative<FiniteSubset>(p->kind())) {
      any_atoms = true;
    } else {
      any_reals = true;
    }
  }
  if (any_atoms && any_reals) throw InvalidTarget("union mixes atom sets and real sets");

  if (any_atoms) {
    std::set<std::string> seen;
    for (const Target* p : parts) {
      std::set<std::string> own(std::get<FiniteSubset>(p->kind()).atoms.begin(),
                                std::get<FiniteSubset>(p->kind()).atoms.end());
      for (const auto& a : own) {
        if (!seen.insert(a).second) throw InvalidTarget("union parts overlap at atom '" + a + "'");
      }
    }
    return;
  }
  std::vector<Interval> spans;
  spans.reserve(parts.size());
  for (const Target* p : parts) spans.push_back(as_interval(*p));
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (intersects(spans[i], spans[j])) throw InvalidTarget("union parts overlap");
    }
  }
}

bool Target::is_atom_set() const {
  return std::ranges::all_of(leaves(*this), [](const Target* t) {
    return std::holds_alternative<FiniteSubset>(t->kind());
  });
}

bool Target::is_real_set() const {
  return std::ranges::none_of(leaves(*this), [](const Target* t) {
    return std::holds_alternative<FiniteSubset>(t->kind());
  });
}

Interval as_interval(const Target& leaf) {
  if (const auto* i = std::get_if<Interval>(&leaf.kind())) return *i;
  if (const auto* h = std::get_if<HalfLineLeq>(&leaf.kind())) {
    return Interval{-std::numeric_limits<double>::infinity(), h->x, false, true};
  }
  throw InvalidTarget("target part is not a real set");
}

std::vector<const Target*> leaves(const Target& t) {
  std::vector<const Target*> out;
  collect(t, out);
  return out;
}

}  // namespace activeinfo
