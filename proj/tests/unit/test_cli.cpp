#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>

#include "activeinfo/cli/app.hpp"
#include "activeinfo/cli/csv.hpp"
#include "activeinfo/cli/dataset.hpp"
#include "activeinfo/cli/errors.hpp"
#include "activeinfo/cli/fit.hpp"
#include "activeinfo/cli/format.hpp"
#include "activeinfo/cli/json_io.hpp"
#include "activeinfo/cli/modes.hpp"
#include "activeinfo/cli/svg.hpp"
#include "activeinfo/error.hpp"

using namespace activeinfo;
using namespace activeinfo::cli;

namespace {

Dataset counts(std::vector<std::string> labels, std::vector<std::uint64_t> c) {
  Dataset d;
  d.labels = std::move(labels);
  d.counts = std::move(c);
  d.source = "inline";
  return d;
}

Dataset values(std::vector<double> v) {
  Dataset d;
  d.values = std::move(v);
  d.source = "inline";
  return d;
}

std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = run(args, out, err);
  return {s, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("activeinfo_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST(Format, RoundTripDigits) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(format_fixed(-0.0001, 2), "0.00");
  EXPECT_EQ(format_fixed(12.345, 1), "12.3");
  double x = 0;
  EXPECT_TRUE(parse_double(" 2.5 ", x));
  EXPECT_EQ(x, 2.5);
  EXPECT_FALSE(parse_double("2.5x", x));
}

TEST(Csv, QuotingRoundTrip) {
  auto rows = parse_csv("a,\"b,c\"\r\n\n\"say \"\"hi\"\"\",2\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].fields[1], "b,c");
  EXPECT_EQ(rows[1].line, 3u);
  EXPECT_EQ(rows[1].fields[0], "say \"hi\"");
  EXPECT_EQ(csv_record({"x", "a,b", "q\""}), "x,\"a,b\",\"q\"\"\"\n");
  EXPECT_THROW(parse_csv("\"open"), DataError);
}

TEST(Ingest, ValuesAndCounts) {
  std::string hundred;
  for (int i = 0; i < 100; ++i) hundred += std::to_string(i) + "\n";
  auto d = parse_dataset(hundred, {}, "v.csv");
  EXPECT_EQ(d.n(), 100u);
  EXPECT_FALSE(d.is_labeled());

  auto c = parse_dataset("label,count\nred,3\ngreen,0\nblue,5\n", {.header = true}, "c.csv");
  EXPECT_TRUE(c.is_labeled());
  EXPECT_EQ(c.labels.size(), 3u);
  EXPECT_EQ(c.n(), 8u);
}

TEST(Ingest, BadRowNamesLine) {
  try {
    parse_dataset("1\n2\nbanana\n4\n", {}, "bad.csv");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("banana"), std::string::npos);
  }
  EXPECT_THROW(parse_dataset("", {}, "empty.csv"), DataError);
  EXPECT_THROW(parse_dataset("a,1\na,2\n", {}, "dup.csv"), DataError);
  EXPECT_THROW(parse_dataset("a,1.5\n", {}, "frac.csv"), DataError);
  EXPECT_THROW(parse_dataset("inf\n", {}, "inf.csv"), DataError);
  EXPECT_THROW(ingest("/nonexistent/activeinfo.csv"), IoError);
}

TEST(Ingest, EmpiricalPmfIsPlugIn) {
  auto p = empirical_pmf(values({3, 1, 3, 2}));
  EXPECT_EQ(vec(p.support().points()), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(vec(p.masses()), (std::vector<double>{0.25, 0.25, 0.5}));
  auto q = empirical_pmf(counts({"b", "a"}, {1, 3}));
  EXPECT_FALSE(q.support().is_ordered());
  EXPECT_EQ(q.mass(1), 0.75);
}

TEST(Fit, MomentMatching) {
  auto g = std::get<Geometric>(fit_baseline(values({1, 3, 4, 8}), BaselineFamily::Geometric));
  EXPECT_EQ(g.mean(), 4.0);
  EXPECT_EQ(g.success_probability(), 0.25);
  auto e = std::get<Exponential>(fit_baseline(values({0.5, 1.5, 4.0}), BaselineFamily::Exponential));
  EXPECT_EQ(e.mean(), 2.0);
  EXPECT_EQ(e.rate(), 0.5);
  auto n = std::get<Normal>(fit_baseline(values({1, 2, 3, 4}), BaselineFamily::Normal));
  EXPECT_EQ(n.mean(), 2.5);
  EXPECT_EQ(n.variance(), 1.25);  // divisor n
  auto u = std::get<UniformInterval>(fit_baseline(values({2, 5, 3}), BaselineFamily::Uniform));
  EXPECT_EQ(u.a(), 2.0);
  EXPECT_EQ(u.b(), 5.0);
  auto eq = std::get<Equiprobable>(fit_baseline(counts({"x", "y", "z"}, {1, 0, 4}), BaselineFamily::Equiprobable));
  EXPECT_EQ(eq.n(), 3u);
  auto w = std::get<Geometric>(fit_baseline(counts({"1", "2"}, {1, 3}), BaselineFamily::Geometric));
  EXPECT_EQ(w.mean(), 1.75);
}

TEST(Fit, IncompatibleData) {
  EXPECT_THROW(fit_baseline(values({3, 3, 3}), BaselineFamily::Normal), InvalidParameter);
  EXPECT_THROW(fit_baseline(values({0.5, 2}), BaselineFamily::Geometric), InvalidParameter);
  EXPECT_THROW(fit_baseline(values({0, 2}), BaselineFamily::Geometric), InvalidParameter);
  EXPECT_THROW(fit_baseline(values({-1, 2}), BaselineFamily::Exponential), InvalidParameter);
  EXPECT_THROW(fit_baseline(values({0, 0}), BaselineFamily::Exponential), InvalidParameter);
  EXPECT_THROW(fit_baseline(values({1, 1}), BaselineFamily::Uniform), InvalidParameter);
  EXPECT_THROW(fit_baseline(values({1, 4}), BaselineFamily::Uniform, {.lo = 2.0, .hi = std::nullopt}),
               InvalidParameter);
  EXPECT_FALSE(parse_family("poisson"));
}

TEST(Modes, AllMassInOneBin) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> c(10, 0);
  for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
  c[6] = 40;
  auto r = mode_hunt(counts(labels, c), Equiprobable(10), 10, 1.0);
  ASSERT_EQ(r.flagged, (std::vector<std::size_t>{6}));
  // log2 10, mpmath.
  EXPECT_NEAR(*r.bins[6].active_info_bits, 3.321928094887362, 1e-15);
  EXPECT_EQ(*r.bins[0].active_info_bits, -INFINITY);
}

TEST(Modes, BimodalCounts) {
  auto r = mode_hunt(counts({"1", "2", "3", "4", "5"}, {50, 0, 0, 0, 50}), Equiprobable(5), 5);
  EXPECT_EQ(r.flagged, (std::vector<std::size_t>{0, 4}));
  // log2(0.5 / 0.2)
  EXPECT_NEAR(*r.bins[0].active_info_bits, 1.3219280948873622, 1e-15);
}

TEST(Modes, ReplicateOfBaselineHasNoFlags) {
  auto r = mode_hunt(counts({"1", "2", "3", "4"}, {25, 25, 25, 25}), Equiprobable(4), 4);
  EXPECT_TRUE(r.flagged.empty());
  for (const auto& b : r.bins) EXPECT_EQ(*b.active_info_bits, 0.0);

  // Numeric data laid out exactly as a uniform baseline's bins.
  std::vector<double> v;
  for (int i = 0; i <= 99; ++i) v.push_back(i / 99.0);
  auto u = mode_hunt(values(v), UniformInterval(0, 1), 2);
  EXPECT_TRUE(u.flagged.empty());
}

TEST(Modes, InvariantToRelabelingAndScaling) {
  auto base = mode_hunt(counts({"a", "b", "c"}, {7, 2, 1}), Equiprobable(FiniteSupport::labeled({"a", "b", "c"})), 3);
  auto scaled =
      mode_hunt(counts({"a", "b", "c"}, {21, 6, 3}), Equiprobable(FiniteSupport::labeled({"a", "b", "c"})), 3);
  auto relabeled =
      mode_hunt(counts({"c", "a", "b"}, {1, 7, 2}), Equiprobable(FiniteSupport::labeled({"c", "a", "b"})), 3);
  EXPECT_EQ(base.flagged, scaled.flagged);
  ASSERT_EQ(relabeled.flagged.size(), 1u);
  EXPECT_EQ(relabeled.bins[relabeled.flagged[0]].label, "a");
  EXPECT_EQ(base.bins[base.flagged[0]].label, "a");
}

TEST(Modes, BinsPartitionRangeAndSumToOne) {
  std::vector<double> v{0.1, 0.2, 0.25, 0.9, 1.7, 2.0, 2.0};
  auto r = mode_hunt(values(v), Exponential(1.0), 4);
  ASSERT_EQ(r.bins.size(), 4u);
  EXPECT_EQ(*r.bins.front().lo, 0.1);
  EXPECT_EQ(*r.bins.back().hi, 2.0);
  double total = 0;
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < r.bins.size(); ++i) {
    if (i) EXPECT_EQ(*r.bins[i].lo, *r.bins[i - 1].hi);
    total += r.bins[i].empirical_prob;
    n += r.bins[i].count;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(n, v.size());
  for (auto i : r.flagged) EXPECT_GT(*r.bins[i].active_info_bits, 0.0);
}

TEST(Modes, ZeroBaselineBinsAreUndefined) {
  auto r = mode_hunt(values({-2, -1, 1, 2}), Exponential(1.0), 2, 0.0);
  EXPECT_FALSE(r.bins[0].active_info_bits.has_value());
  EXPECT_EQ(r.flagged, (std::vector<std::size_t>{}));
  EXPECT_THROW(mode_hunt(values({1, 2}), Exponential(1.0), 1), InvalidParameter);
}

TEST(JsonIo, DistributionSpecs) {
  auto e = parse_distribution("exponential:rate=0.5");
  EXPECT_EQ(std::get<Exponential>(e.variant()).mean(), 2.0);
  auto n = parse_distribution(R"({"family":"normal","params":{"mu":1,"sigma2":4}})");
  EXPECT_EQ(std::get<Normal>(n.variant()).variance(), 4.0);
  auto round = distribution_from_json(to_json(n));
  EXPECT_EQ(std::get<Normal>(round.variant()), std::get<Normal>(n.variant()));
  auto p = parse_distribution(R"({"family":"pmf","params":{"points":[1,2],"masses":[0.25,0.75]}})");
  EXPECT_EQ(std::get<Pmf>(p.variant()).mass(1), 0.75);
  EXPECT_THROW(parse_distribution("poisson:mu=1"), UsageError);
  EXPECT_THROW(parse_distribution("normal:mu=1"), UsageError);
  EXPECT_THROW(parse_distribution("geometric:mu=0.5"), InvalidParameter);
}

TEST(JsonIo, TargetSpecs) {
  EXPECT_EQ(probability(Equiprobable(4), parse_target("set:1,2,3")), 0.75);
  EXPECT_EQ(probability(UniformInterval(0, 4), parse_target("le:1")), 0.25);
  EXPECT_EQ(probability(UniformInterval(0, 4), parse_target("interval:1,2")), 0.25);
  EXPECT_EQ(probability(UniformInterval(0, 4), parse_target("gt:3")), 0.25);
  EXPECT_EQ(probability(UniformInterval(0, 4), parse_target("interval:[0,1)|interval:(3,4]")), 0.5);
  EXPECT_THROW(parse_target("between:1,2"), UsageError);
  EXPECT_THROW(parse_target("le:abc"), UsageError);
}

TEST(JsonIo, DeterministicDump) {
  Json j = Json::object();
  j["b"] = 0.1;
  j["a"] = Json::array({1.0, INFINITY});
  EXPECT_EQ(dump_json(j), "{\n  \"b\": 0.10000000000000001,\n  \"a\": [1, \"inf\"]\n}\n");
}

TEST(Svg, FixedCanvasAndEscaping) {
  std::vector<double> xs{0, 1, 2};
  auto svg = render_cdf_svg({sample_cdf(Exponential(1.0), xs), sample_cdf(Equiprobable(FiniteSupport::ordered({0.5, 1.5})), xs)}, "a<b & c");
  EXPECT_NE(svg.find("width=\"800\" height=\"500\""), std::string::npos);
  EXPECT_NE(svg.find("a&lt;b &amp; c"), std::string::npos);
  EXPECT_EQ(svg, render_cdf_svg({sample_cdf(Exponential(1.0), xs), sample_cdf(Equiprobable(FiniteSupport::ordered({0.5, 1.5})), xs)}, "a<b & c"));
}

TEST(Run, ExitCodes) {
  auto ok = invoke({"ai", "--baseline", "equiprobable:n=4", "--alternative", "equiprobable:n=4", "--target", "set:1"});
  EXPECT_EQ(ok.status, 0) << ok.err;
  EXPECT_NE(ok.out.find("\"unit\": \"bits\""), std::string::npos);
  EXPECT_NE(ok.out.find("\"schema\": \"activeinfo/1\""), std::string::npos);

  EXPECT_EQ(invoke({"--help"}).status, 0);
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({"ai", "--baseline", "equiprobable:n=4", "--target", "set:1"}).status, 2);
  EXPECT_EQ(invoke({"ai", "--baseline", "bogus:x=1", "--alternative", "equiprobable:n=4", "--target", "set:1"}).status, 2);
  EXPECT_EQ(invoke({"--unit", "furlongs", "physics", "barometric", "--height", "1", "--temperature", "300"}).status, 2);

  // Domain errors: undefined baseline, negative temperature, unreadable data.
  auto undefined = invoke({"ai", "--baseline", "exponential:mu=1", "--alternative", "normal:mu=0,sigma2=1",
                           "--target", "le:-1"});
  EXPECT_EQ(undefined.status, 1);
  EXPECT_FALSE(undefined.err.empty());
  EXPECT_EQ(invoke({"physics", "barometric", "--height", "1", "--temperature", "-3"}).status, 1);
  auto missing = invoke({"fit", "--data", "/nonexistent/x.csv", "--family", "normal"});
  EXPECT_EQ(missing.status, 1);
  EXPECT_NE(missing.err.find("/nonexistent/x.csv"), std::string::npos);
}

TEST(Run, MaxentNoConvergenceReportsDiagnostics) {
  auto problem = scratch("slow.json",
                         R"({"support":[1,2,3,4,5],"constraints":[{"feature":"identity","value":4.999}],)"
                         R"("max_iterations":1})");
  auto r = invoke({"maxent", problem.string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("\"converged\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"residual\""), std::string::npos);

  auto infeasible = scratch("infeasible.json", R"({"support":[1,2,3],"constraints":[{"feature":"identity","value":7}]})");
  EXPECT_EQ(invoke({"maxent", infeasible.string()}).status, 1);
}

TEST(Run, PhysicsWhatIfIsLabeled) {
  auto ref = invoke({"physics", "barometric", "--height", "0", "--temperature", "250"});
  EXPECT_NE(ref.out.find("\"reference\": true"), std::string::npos);
  EXPECT_NE(ref.out.find("\"pressure_ratio\": 1"), std::string::npos);
  auto alt = invoke({"physics", "barometric", "--height", "100", "--temperature", "250", "--what-if-g", "3.71"});
  EXPECT_NE(alt.out.find("\"reference\": false"), std::string::npos);
}
