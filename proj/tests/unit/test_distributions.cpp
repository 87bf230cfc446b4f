#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "activeinfo/distributions.hpp"
#include "activeinfo/error.hpp"

using namespace activeinfo;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Distribution> numeric_families() {
  return {UniformInterval(-1.0, 3.0), Geometric(4.0), Exponential(2.0), Normal(1.0, 2.5)};
}

}  // namespace

TEST(Distributions, RejectsOutOfDomainParameters) {
  EXPECT_THROW(Equiprobable(0), InvalidParameter);
  EXPECT_THROW(UniformInterval(1.0, 1.0), InvalidParameter);
  EXPECT_THROW(UniformInterval(2.0, 1.0), InvalidParameter);
  EXPECT_THROW(Geometric(0.99), InvalidParameter);
  EXPECT_THROW(Exponential(0.0), InvalidParameter);
  EXPECT_THROW(Exponential(-1.0), InvalidParameter);
  EXPECT_THROW(Normal(0.0, 0.0), InvalidParameter);
  EXPECT_THROW(Normal(std::nan(""), 1.0), InvalidParameter);
  EXPECT_NO_THROW(Geometric(1.0));
}

TEST(Distributions, EquiprobableSubsetIsCountRatio) {
  Equiprobable ten(10);
  EXPECT_EQ(probability(ten, Target::atoms({"1", "4", "7"})), 0.3);
  EXPECT_EQ(probability(ten, Target::atoms({"1", "1", "4"})), 0.2);  // set semantics
  EXPECT_THROW(probability(ten, Target::atoms({"11"})), SupportMismatch);
  EXPECT_THROW(probability(ten, Target::at_most(3.0)), SupportMismatch);
}

TEST(Distributions, ClosedFormExamples) {
  EXPECT_EQ(probability(Normal(3.0, 7.0), Target::at_most(3.0)), 0.5);
  // 1 - e^-1, mpmath at 40 digits.
  EXPECT_NEAR(probability(Exponential(1.0), Target::at_most(1.0)), 0.63212055882855767840, 1e-15);
  EXPECT_EQ(cdf(Exponential(2.0), 0.0), 0.0);
  EXPECT_NEAR(cdf(Exponential(2.0), 3.0), 1.0 - std::exp(-1.5), 1e-15);
  EXPECT_EQ(cdf(Normal(0.0, 1.0), 0.0), 0.5);
}

TEST(Distributions, GeometricCdfMatchesMassSum) {
  // Oracle: direct sum of (1-p)^(k-1) p.
  Geometric g(4.0);
  double p = 0.25;
  double running = 0.0;
  for (int k = 1; k <= 40; ++k) {
    running += std::pow(1.0 - p, k - 1) * p;
    EXPECT_NEAR(cdf(g, k), running, 1e-14) << "k=" << k;
    EXPECT_NEAR(cdf(g, k + 0.5), running, 1e-14);
  }
  EXPECT_NEAR(cdf(g, 3.0), 0.578125, 1e-15);
  EXPECT_EQ(cdf(g, 0.999), 0.0);
}

TEST(Distributions, GeometricIntervalsHonourEndpoints) {
  Geometric g(4.0);
  const double p2 = 0.75 * 0.25;
  const double p3 = 0.75 * 0.75 * 0.25;
  EXPECT_NEAR(probability(g, Target(Interval{2.0, 3.0, true, true})), p2 + p3, 1e-15);
  EXPECT_NEAR(probability(g, Target(Interval{2.0, 3.0, false, true})), p3, 1e-15);
  EXPECT_NEAR(probability(g, Target(Interval{2.0, 3.0, true, false})), p2, 1e-15);
  EXPECT_EQ(probability(g, Target(Interval{2.0, 3.0, false, false})), 0.0);
  EXPECT_NEAR(probability(g, Target::atoms({"2", "3"})), p2 + p3, 1e-15);
  EXPECT_NEAR(probability(g, Target::greater_than(0.0)), 1.0, 1e-15);
}

TEST(Distributions, ContinuousEndpointsAreIrrelevant) {
  for (const auto& d : {Distribution(Exponential(1.5)), Distribution(Normal(0.0, 1.0)),
                        Distribution(UniformInterval(0.0, 2.0))}) {
    double closed = probability(d, Target(Interval{0.3, 1.1, true, true}));
    double open = probability(d, Target(Interval{0.3, 1.1, false, false}));
    EXPECT_EQ(closed, open);
    EXPECT_NEAR(closed, cdf(d, 1.1) - cdf(d, 0.3), 1e-12);
    EXPECT_THROW(probability(d, Target::atoms({"1"})), SupportMismatch);
  }
}

TEST(Distributions, FullSupportHasUnitMass) {
  for (const auto& d : numeric_families()) {
    EXPECT_NEAR(probability(d, Target(Interval{})), 1.0, 1e-12) << describe(d);
    EXPECT_NEAR(cdf(d, 1e6), 1.0, 1e-9);
  }
  EXPECT_EQ(probability(Equiprobable(7), Target::atoms({"1", "2", "3", "4", "5", "6", "7"})), 1.0);
}

TEST(Distributions, UnionIsSumOfParts) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3.0, 6.0);
  for (const auto& d : numeric_families()) {
    for (int trial = 0; trial < 200; ++trial) {
      double cuts[4] = {u(rng), u(rng), u(rng), u(rng)};
      std::sort(cuts, cuts + 4);
      Target a(Interval{cuts[0], cuts[1], true, false});
      Target b(Interval{cuts[2], cuts[3], true, true});
      Target both(UnionOf{{a, b}});
      double pa = probability(d, a);
      double pb = probability(d, b);
      double pu = probability(d, both);
      EXPECT_NEAR(pu, pa + pb, 1e-12);
      EXPECT_GE(pu, 0.0);
      EXPECT_LE(pu, 1.0);
    }
  }
}

TEST(Distributions, OverlappingUnionIsRejected) {
  EXPECT_THROW(Target(UnionOf{{Target::closed(0.0, 1.0), Target::closed(1.0, 2.0)}}), InvalidTarget);
  EXPECT_NO_THROW(Target(UnionOf{{Target::closed(0.0, 1.0), Target(Interval{1.0, 2.0, false, true})}}));
  EXPECT_THROW(Target(UnionOf{{Target::atoms({"a", "b"}), Target::atoms({"b"})}}), InvalidTarget);
  EXPECT_THROW(Target(UnionOf{{Target::atoms({"a"}), Target::at_most(0.0)}}), InvalidTarget);
  EXPECT_THROW(Target::closed(2.0, 1.0), InvalidTarget);

  // Same point spelled two ways only collides once resolved against a support.
  Pmf p = Pmf::over_points({1.0, 2.0}, {0.5, 0.5});
  Target spelled(UnionOf{{Target::atoms({"1"}), Target::atoms({"1.0"})}});
  EXPECT_THROW(probability(p, spelled), InvalidTarget);
}

TEST(Distributions, CdfIsNondecreasing) {
  for (const auto& d : numeric_families()) {
    double prev = 0.0;
    for (double x = -10.0; x <= 30.0; x += 0.013) {
      double f = cdf(d, x);
      ASSERT_GE(f, prev) << describe(d) << " at " << x;
      prev = f;
    }
  }
}

TEST(Distributions, CdfPlusSurvivalIsOne) {
  for (const auto& d : numeric_families()) {
    for (double x = -5.0; x <= 20.0; x += 0.25) {
      EXPECT_NEAR(cdf(d, x) + survival(d, x), 1.0, 1e-15);
    }
  }
}

TEST(Distributions, QuantileInvertsCdf) {
  for (const auto& d : numeric_families()) {
    for (double u : {1e-6, 0.1, 0.5, 0.9, 1 - 1e-6}) {
      double x = quantile(d, u);
      EXPECT_GE(cdf(d, x), u - 1e-12) << describe(d);
    }
  }
}

TEST(Distributions, Entropies) {
  EXPECT_EQ(entropy(Equiprobable(8), InfoUnit::Bits), 3.0);
  EXPECT_EQ(entropy(UniformInterval(0.0, 1.0), InfoUnit::Bits), 0.0);
  EXPECT_EQ(entropy(Exponential(1.0), InfoUnit::Nats), 1.0);
  // mpmath references.
  EXPECT_NEAR(entropy(Geometric(4.0), InfoUnit::Nats), 2.2493405784752334, 1e-14);
  EXPECT_NEAR(entropy(Normal(5.0, 1.0), InfoUnit::Nats), 1.4189385332046727, 1e-14);
  EXPECT_EQ(entropy(Geometric(1.0)), 0.0);
}

TEST(Distributions, GeometricEntropyMatchesSeries) {
  Geometric g(3.0);
  double p = 1.0 / 3.0;
  double h = 0.0;
  for (int k = 1; k < 2000; ++k) {
    double m = std::pow(1 - p, k - 1) * p;
    if (m > 0) h -= m * std::log(m);
  }
  EXPECT_NEAR(entropy(g, InfoUnit::Nats), h, 1e-12);
}

TEST(Distributions, OrderedEquiprobableAndPmf) {
  Equiprobable three(FiniteSupport::ordered({1.0, 2.0, 3.0}));
  EXPECT_EQ(cdf(three, 0.5), 0.0);
  EXPECT_EQ(cdf(three, 2.0), 2.0 / 3.0);
  EXPECT_EQ(cdf(three, 3.0), 1.0);
  EXPECT_THROW(cdf(Equiprobable(3), 1.0), UnorderableSupport);

  Pmf fx = Pmf::over_points({1, 2, 3}, {2.0 / 3, 1.0 / 6, 1.0 / 6});
  EXPECT_EQ(cdf(fx, 3.0), 1.0);
  EXPECT_EQ(probability(fx, Target::atoms({"2"})), 1.0 / 6);
  EXPECT_EQ(density(fx, 1.0), 2.0 / 3);
  EXPECT_EQ(density(fx, 1.5), 0.0);
}

TEST(Distributions, PmfValidation) {
  EXPECT_THROW(Pmf::over_points({1, 2}, {0.5, 0.6}), InvalidParameter);
  EXPECT_THROW(Pmf::over_points({1, 2}, {1.5, -0.5}), InvalidParameter);
  EXPECT_THROW(Pmf::over_points({2, 1}, {0.5, 0.5}), InvalidParameter);
  EXPECT_THROW(Pmf::over_points({1, 1}, {0.5, 0.5}), InvalidParameter);
  EXPECT_THROW(Pmf::over_labels({"a", "a"}, {0.5, 0.5}), InvalidParameter);
  EXPECT_THROW(Pmf::over_labels({"a"}, {0.5, 0.5}), InvalidParameter);
}

TEST(Distributions, DensityHelpers) {
  EXPECT_NEAR(normal_density(0.0, 0.0, 1.0), 1.0 / std::sqrt(2 * std::numbers::pi), 1e-16);
  EXPECT_NEAR(density(Exponential(2.0), 1.0), 0.5 * std::exp(-0.5), 1e-16);
  EXPECT_NEAR(density(Geometric(4.0), 2.0), 0.1875, 1e-16);
  EXPECT_EQ(density(Geometric(4.0), 2.5), 0.0);
}
