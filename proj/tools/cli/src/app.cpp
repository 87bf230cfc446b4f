#include "activeinfo/cli/app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "activeinfo/active_info.hpp"
#include "activeinfo/cli/csv.hpp"
#include "activeinfo/cli/dataset.hpp"
#include "activeinfo/cli/errors.hpp"
#include "activeinfo/cli/fit.hpp"
#include "activeinfo/cli/format.hpp"
#include "activeinfo/cli/json_io.hpp"
#include "activeinfo/cli/modes.hpp"
#include "activeinfo/cli/svg.hpp"
#include "activeinfo/dominance.hpp"
#include "activeinfo/maxent.hpp"
#include "activeinfo/physics.hpp"

namespace activeinfo::cli {
namespace {

struct Common {
  std::string unit = "bits";
  std::string out;
};

struct DataFlags {
  std::string path;
  bool header = false;
  std::string format = "auto";
  std::size_t column = 0;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f.flush()) throw IoError("failed writing '" + path + "'");
}

InfoUnit unit_of(const Common& c) {
  auto u = parse_unit(c.unit);
  if (!u) throw UsageError("unknown unit '" + c.unit + "' (expected bits, nats or hartleys)");
  return *u;
}

void add_data_flags(CLI::App* cmd, DataFlags& d, bool required) {
  auto* opt = cmd->add_option("--data", d.path, "CSV file: one numeric column, or label,count rows");
  if (required) opt->required();
  cmd->add_flag("--header", d.header, "First CSV row is a header");
  cmd->add_option("--format", d.format, "auto | values | counts")->check(CLI::IsMember({"auto", "values", "counts"}));
  cmd->add_option("--column", d.column, "0-based column for the values format");
}

Dataset load(const DataFlags& d) {
  IngestOptions o;
  o.header = d.header;
  o.column = d.column;
  o.format = d.format == "values" ? InputFormat::Values : d.format == "counts" ? InputFormat::Counts : InputFormat::Auto;
  return ingest(d.path, o);
}

Json dataset_json(const Dataset& d) {
  Json j = Json::object();
  j["source"] = d.source;
  j["n"] = d.n();
  j["kind"] = d.is_labeled() ? "counts" : "values";
  return j;
}

GridSpec parse_grid(const std::string& s) {
  auto parts = split(s, ',');
  double lo = 0, hi = 0, step = 0;
  if (parts.size() != 3 || !parse_double(parts[0], lo) || !parse_double(parts[1], hi) ||
      !parse_double(parts[2], step)) {
    throw UsageError("--grid needs lo,hi,step (got '" + s + "')");
  }
  return GridSpec::uniform(lo, hi, step);
}

// ---- ai -------------------------------------------------------------------

struct AiArgs {
  std::string baseline, alternative, target;
  DataFlags data;
};

Json cmd_ai(const AiArgs& a, const Common& c) {
  if (a.alternative.empty() == a.data.path.empty()) {
    throw UsageError("ai needs exactly one of --alternative or --data");
  }
  const Distribution baseline = parse_distribution(a.baseline);
  const Target target = parse_target(a.target);
  Json j = Json::object();
  j["baseline"] = to_json(baseline);
  std::optional<Distribution> alt;
  if (!a.alternative.empty()) {
    alt = parse_distribution(a.alternative);
    j["alternative"] = to_json(*alt);
  } else {
    const Dataset d = load(a.data);
    alt = empirical_pmf(d);
    Json e = dataset_json(d);
    e["estimate"] = to_json(*alt);
    j["alternative"] = Json{{"empirical", std::move(e)}};
  }
  j["target"] = a.target;
  j["report"] = to_json(active_information(*alt, baseline, target, unit_of(c)));
  return j;
}

// ---- maxent ---------------------------------------------------------------

struct MaxentArgs {
  std::string problem;
  std::string csv;
};

std::vector<double> problem_support(const Json& p) {
  if (!p.contains("support")) throw DataError("maxent problem is missing 'support'");
  const Json& s = p["support"];
  std::vector<double> pts;
  if (s.is_array()) {
    for (const auto& e : s) {
      if (!e.is_number()) throw DataError("maxent 'support' must hold numbers");
      pts.push_back(e.get<double>());
    }
  } else if (s.is_object() && s.contains("lo") && s.contains("hi") && s.contains("count")) {
    const double lo = s["lo"].get<double>(), hi = s["hi"].get<double>();
    const auto count = s["count"].get<std::int64_t>();
    if (count < 2 || !(hi > lo)) throw DataError("maxent support grid needs count >= 2 and hi > lo");
    for (std::int64_t i = 0; i < count; ++i) {
      pts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    pts.back() = hi;
  } else {
    throw DataError("maxent 'support' must be an array or {lo, hi, count}");
  }
  return pts;
}

MomentConstraint parse_constraint(const Json& e, std::size_t support_size) {
  if (!e.is_object() || !e.contains("feature") || !e.contains("value")) {
    throw DataError("each constraint needs 'feature' and 'value'");
  }
  const auto name = e["feature"].get<std::string>();
  const double value = e["value"].get<double>();
  if (name == "identity") return {Feature::identity(), value};
  if (name == "square") return {Feature::square(), value};
  if (name == "centered_square" || name == "centered-square") {
    if (!e.contains("center")) throw DataError("centered_square constraint needs 'center'");
    return {Feature::centered_square(e["center"].get<double>()), value};
  }
  if (name == "tabulated") {
    if (!e.contains("values")) throw DataError("tabulated constraint needs 'values'");
    auto vals = e["values"].get<std::vector<double>>();
    if (vals.size() != support_size) throw DataError("tabulated constraint needs one value per support point");
    return {Feature::tabulated(std::move(vals)), value};
  }
  throw DataError("unknown feature '" + name + "' (expected identity, square, centered_square, tabulated)");
}

Json constraint_rows(const std::vector<MomentConstraint>& cs, const std::vector<double>& residuals,
                     const std::vector<double>& multipliers) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Json r = Json::object();
    r["feature"] = cs[k].feature.name();
    r["value"] = cs[k].value;
    r["residual"] = k < residuals.size() ? Json(residuals[k]) : Json(nullptr);
    r["multiplier"] = k < multipliers.size() ? Json(multipliers[k]) : Json(nullptr);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Returns the result plus whether the solve converged.
std::pair<Json, bool> cmd_maxent(const MaxentArgs& a, const Common& c) {
  std::ifstream in(a.problem);
  if (!in) throw IoError("cannot read problem file '" + a.problem + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json p = Json::parse(buf.str(), nullptr, false);
  if (p.is_discarded() || !p.is_object()) throw DataError("problem file '" + a.problem + "' is not a JSON object");

  const auto support = problem_support(p);
  std::vector<MomentConstraint> cs;
  if (p.contains("constraints")) {
    for (const auto& e : p["constraints"]) cs.push_back(parse_constraint(e, support.size()));
  }
  SolverOptions opts;
  if (p.contains("tolerance")) opts.tolerance = p["tolerance"].get<double>();
  if (p.contains("max_iterations")) opts.max_iterations = p["max_iterations"].get<int>();
  const InfoUnit unit = unit_of(c);

  Json j = Json::object();
  j["support_size"] = support.size();
  j["tolerance"] = opts.tolerance;
  j["max_iterations"] = opts.max_iterations;
  try {
    const auto sol = solve_maxent(support, cs, opts);
    j["converged"] = true;
    j["iterations"] = sol.iterations;
    j["constraints"] = constraint_rows(cs, sol.residuals, sol.multipliers);
    j["log_partition"] = sol.log_partition;
    j["unit"] = to_string(unit);
    j["entropy"] = pmf_entropy(sol.pmf, unit);
    j["pmf"] = to_json(sol.pmf);
    if (!a.csv.empty()) {
      std::string csv = csv_record({"point", "mass"});
      const auto& pts = sol.pmf.support().points();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        csv += csv_record({format_double(pts[i]), format_double(sol.pmf.mass(i))});
      }
      write_file(a.csv, csv);
    }
    return {j, true};
  } catch (const NoConvergence& e) {
    j["converged"] = false;
    j["iterations"] = e.iterations();
    j["constraints"] = constraint_rows(cs, e.residuals(), e.multipliers());
    j["message"] = e.what();
    return {j, false};
  }
}

// ---- dominance ------------------------------------------------------------

struct DominanceArgs {
  std::vector<std::string> dists;
  std::string grid;
  std::string csv, svg, title = "Cumulative distribution functions";
};

Json cmd_dominance(const DominanceArgs& a, const Common& c) {
  if (a.dists.size() < 2) throw UsageError("dominance needs --dist at least twice");
  std::vector<Distribution> ds;
  for (const auto& s : a.dists) ds.push_back(parse_distribution(s));
  const GridSpec grid = a.grid.empty() ? GridSpec::automatic() : parse_grid(a.grid);
  const InfoUnit unit = unit_of(c);

  Json j = Json::object();
  Json list = Json::array();
  for (const auto& d : ds) list.push_back(to_json(d));
  j["distributions"] = std::move(list);
  const bool all_finite = std::all_of(ds.begin(), ds.end(), [](const Distribution& d) { return d.is_finite(); });
  j["grid"] = all_finite ? std::string("all atoms") : grid.describe();
  j["convention"] = "phi is dominated by varphi iff F_phi(x) >= F_varphi(x) for all x";
  Json pairs = Json::array();
  std::set<double> xs;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t k = 0; k < ds.size(); ++k) {
      if (i == k) continue;
      Json pr = Json::object();
      pr["phi"] = i;
      pr["varphi"] = k;
      pr["report"] = to_json(is_dominated(ds[i], ds[k], grid));
      pr["lemma_holds"] = verify_dominance_lemma(ds[i], ds[k], grid, unit);
      pairs.push_back(std::move(pr));
      if (i < k) {
        for (double x : evaluation_points(ds[i], ds[k], grid)) xs.insert(x);
      }
    }
  }
  j["pairs"] = std::move(pairs);

  if (!a.csv.empty() || !a.svg.empty()) {
    const std::vector<double> pts(xs.begin(), xs.end());
    std::vector<CdfCurve> curves;
    for (const auto& d : ds) curves.push_back(sample_cdf(d, pts));
    if (!a.csv.empty()) {
      std::vector<std::string> head{"x"};
      for (const auto& cv : curves) head.push_back(cv.label);
      std::string csv = csv_record(head);
      for (std::size_t r = 0; r < pts.size(); ++r) {
        std::vector<std::string> row{format_double(pts[r])};
        for (const auto& cv : curves) row.push_back(format_double(cv.y[r]));
        csv += csv_record(row);
      }
      write_file(a.csv, csv);
    }
    if (!a.svg.empty()) {
      std::vector<double> plot = pts;
      if (all_finite && pts.size() >= 2) {
        // Pad by a tenth of the span so the outer jumps are visible.
        const double pad = (pts.back() - pts.front()) / 10.0;
        plot.insert(plot.begin(), pts.front() - pad);
        plot.push_back(pts.back() + pad);
      }
      std::vector<CdfCurve> plotted;
      for (const auto& d : ds) plotted.push_back(sample_cdf(d, plot));
      write_file(a.svg, render_cdf_svg(plotted, a.title));
    }
  }
  return j;
}

// ---- modes ----------------------------------------------------------------

struct ModesArgs {
  DataFlags data;
  std::string baseline, fit;
  std::size_t bins = 10;
  double threshold = kDefaultThresholdBits;
  std::string csv;
};

Json cmd_modes(const ModesArgs& a) {
  if (a.baseline.empty() == a.fit.empty()) throw UsageError("modes needs exactly one of --baseline or --fit");
  const Dataset d = load(a.data);
  std::optional<Distribution> base;
  if (!a.baseline.empty()) {
    base = parse_distribution(a.baseline);
  } else {
    auto fam = parse_family(a.fit);
    if (!fam) throw UsageError("unknown family '" + a.fit + "'");
    base = Distribution(fit_baseline(d, *fam));
  }
  const ModeReport r = mode_hunt(d, *base, a.bins, a.threshold);

  Json j = Json::object();
  j["data"] = dataset_json(d);
  j["baseline"] = to_json(*base);
  j["unit"] = "bits";
  j["threshold_bits"] = r.threshold_bits;
  Json bins = Json::array();
  for (std::size_t i = 0; i < r.bins.size(); ++i) {
    const auto& b = r.bins[i];
    Json e = Json::object();
    e["index"] = i;
    if (b.lo) {
      e["lo"] = *b.lo;
      e["hi"] = *b.hi;
    } else {
      e["label"] = b.label;
    }
    e["count"] = b.count;
    e["empirical_prob"] = b.empirical_prob;
    e["baseline_prob"] = b.baseline_prob;
    e["active_info_bits"] = b.active_info_bits ? Json(*b.active_info_bits) : Json(nullptr);
    bins.push_back(std::move(e));
  }
  j["bins"] = std::move(bins);
  j["flagged"] = r.flagged;

  if (!a.csv.empty()) {
    std::string csv = csv_record({"index", "lo", "hi", "label", "count", "empirical_prob", "baseline_prob",
                                  "active_info_bits", "flagged"});
    std::set<std::size_t> flagged(r.flagged.begin(), r.flagged.end());
    for (std::size_t i = 0; i < r.bins.size(); ++i) {
      const auto& b = r.bins[i];
      csv += csv_record({std::to_string(i), b.lo ? format_double(*b.lo) : "", b.hi ? format_double(*b.hi) : "",
                         b.label, std::to_string(b.count), format_double(b.empirical_prob),
                         format_double(b.baseline_prob), b.active_info_bits ? format_double(*b.active_info_bits) : "",
                         flagged.count(i) ? "1" : "0"});
    }
    write_file(a.csv, csv);
  }
  return j;
}

// ---- physics --------------------------------------------------------------

struct WhatIf {
  std::optional<double> gas_constant, gravity, molar_mass, boltzmann;

  bool any() const { return gas_constant || gravity || molar_mass || boltzmann; }
  physics::PhysicalConstants apply() const {
    auto k = physics::kReferenceConstants;
    if (gas_constant) k.gas_constant = *gas_constant;
    if (gravity) k.gravity = *gravity;
    if (molar_mass) k.molar_mass_air = *molar_mass;
    if (boltzmann) k.boltzmann = *boltzmann;
    return k;
  }
};

struct PhysicsArgs {
  double height = 0, temperature = 0, mass = 0;
  std::string velocity;
  WhatIf what_if;
};

Json constants_json(const physics::PhysicalConstants& k) {
  return Json{{"R", k.gas_constant}, {"g", k.gravity}, {"M", k.molar_mass_air}, {"k", k.boltzmann}};
}

Json physics_envelope(const char* formula, Json input, Json output, const WhatIf& w) {
  Json j = Json::object();
  j["formula_id"] = formula;
  j["reference"] = !w.any();
  if (w.any()) j["note"] = "what-if run with overridden constants; not a reference computation";
  j["constants"] = constants_json(w.apply());
  j["input"] = std::move(input);
  j["output"] = std::move(output);
  return j;
}

Json cmd_barometric(const PhysicsArgs& a) {
  const auto k = a.what_if.apply();
  const double ratio = a.what_if.any() ? physics::barometric_pressure_ratio(a.height, a.temperature, k)
                                       : physics::barometric_pressure_ratio(a.height, a.temperature);
  Json out = Json::object();
  out["pressure_ratio"] = ratio;
  out["scale_height_m"] = physics::barometric_scale_height(a.temperature, k);
  return physics_envelope("barometric", Json{{"height_m", a.height}, {"temperature_k", a.temperature}}, out,
                          a.what_if);
}

Json cmd_maxwell(const PhysicsArgs& a) {
  auto parts = split(a.velocity, ',');
  physics::Velocity v{};
  if (parts.size() != 3 || !parse_double(parts[0], v[0]) || !parse_double(parts[1], v[1]) ||
      !parse_double(parts[2], v[2])) {
    throw UsageError("--velocity needs vx,vy,vz (got '" + a.velocity + "')");
  }
  const auto k = a.what_if.apply();
  const double density = a.what_if.any() ? physics::maxwell_boltzmann_density(v, a.mass, a.temperature, k)
                                         : physics::maxwell_boltzmann_density(v, a.mass, a.temperature);
  Json in = Json::object();
  in["velocity_m_s"] = Json::array({v[0], v[1], v[2]});
  in["mass_kg"] = a.mass;
  in["temperature_k"] = a.temperature;
  Json out = Json::object();
  out["density"] = density;
  out["component_variance"] = physics::maxwell_boltzmann_component_variance(a.mass, a.temperature, k);
  return physics_envelope("maxwell-boltzmann", std::move(in), std::move(out), a.what_if);
}

void add_what_if(CLI::App* cmd, WhatIf& w) {
  cmd->add_option("--what-if-R", w.gas_constant, "Override R (non-reference)");
  cmd->add_option("--what-if-g", w.gravity, "Override g (non-reference)");
  cmd->add_option("--what-if-M", w.molar_mass, "Override M (non-reference)");
  cmd->add_option("--what-if-k", w.boltzmann, "Override k (non-reference)");
}

// ---- fit ------------------------------------------------------------------

struct FitArgs {
  DataFlags data;
  std::string family;
  std::optional<double> lo, hi;
};

Json cmd_fit(const FitArgs& a, const Common& c) {
  auto fam = parse_family(a.family);
  if (!fam) throw UsageError("unknown family '" + a.family + "'");
  const Dataset d = load(a.data);
  const BaselineSpec spec = fit_baseline(d, *fam, FitOptions{a.lo, a.hi});
  const InfoUnit unit = unit_of(c);
  Json j = Json::object();
  j["data"] = dataset_json(d);
  j["family"] = a.family;
  j["baseline"] = to_json(Distribution(spec));
  j["unit"] = to_string(unit);
  j["entropy"] = entropy(spec, unit);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Active information with maximum-entropy baselines", "activeinfo"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--unit", common.unit, "bits | nats | hartleys")->check(CLI::IsMember({"bits", "nats", "hartleys"}));
  app.add_option("--out", common.out, "Write the JSON result here instead of stdout");

  AiArgs ai;
  auto* ai_cmd = app.add_subcommand("ai", "Active information of an alternative vs. a baseline on a target");
  ai_cmd->add_option("--baseline", ai.baseline, "Baseline distribution spec")->required();
  ai_cmd->add_option("--alternative", ai.alternative, "Declared alternative distribution spec");
  ai_cmd->add_option("--target", ai.target, "set:a,b | le:x | gt:x | interval:lo,hi")->required();
  add_data_flags(ai_cmd, ai.data, false);

  MaxentArgs mx;
  auto* mx_cmd = app.add_subcommand("maxent", "Maximum-entropy pmf under moment constraints");
  mx_cmd->add_option("problem,--problem", mx.problem, "JSON problem file")->required();
  mx_cmd->add_option("--csv", mx.csv, "Write point,mass rows here");

  DominanceArgs dm;
  auto* dm_cmd = app.add_subcommand("dominance", "Pairwise stochastic dominance of CDFs");
  dm_cmd->add_option("--dist", dm.dists, "Distribution spec (repeat)")->required();
  dm_cmd->add_option("--grid", dm.grid, "lo,hi,step (default: automatic quantile grid)");
  dm_cmd->add_option("--csv", dm.csv, "Write the CDF curves as CSV");
  dm_cmd->add_option("--svg", dm.svg, "Write an SVG overlay of the CDF curves");
  dm_cmd->add_option("--title", dm.title, "SVG title");

  ModesArgs md;
  auto* md_cmd = app.add_subcommand("modes", "Flag histogram bins with high active information");
  add_data_flags(md_cmd, md.data, true);
  md_cmd->add_option("--baseline", md.baseline, "Baseline distribution spec");
  md_cmd->add_option("--fit", md.fit, "Fit the baseline family to the data instead");
  md_cmd->add_option("--bins", md.bins, "Number of equal-width bins for numeric data");
  md_cmd->add_option("--threshold-bits", md.threshold, "Flag bins above this many bits");
  md_cmd->add_option("--csv", md.csv, "Write the bin table as CSV");

  PhysicsArgs ph;
  auto* ph_cmd = app.add_subcommand("physics", "Reference physics computations");
  ph_cmd->require_subcommand(1);
  auto* baro = ph_cmd->add_subcommand("barometric", "Isothermal pressure ratio P(h)/P0");
  baro->add_option("--height", ph.height, "Height in m")->required();
  baro->add_option("--temperature", ph.temperature, "Temperature in K")->required();
  add_what_if(baro, ph.what_if);
  auto* mb = ph_cmd->add_subcommand("maxwell-boltzmann", "Velocity density of an ideal gas");
  mb->add_option("--velocity", ph.velocity, "vx,vy,vz in m/s")->required();
  mb->add_option("--mass", ph.mass, "Particle mass in kg")->required();
  mb->add_option("--temperature", ph.temperature, "Temperature in K")->required();
  add_what_if(mb, ph.what_if);

  FitArgs ft;
  auto* ft_cmd = app.add_subcommand("fit", "Moment-matched maximum-entropy baseline for a dataset");
  add_data_flags(ft_cmd, ft.data, true);
  ft_cmd->add_option("--family", ft.family, "equiprobable | uniform | geometric | exponential | normal")->required();
  ft_cmd->add_option("--lo", ft.lo, "Declared lower bound (uniform)");
  ft_cmd->add_option("--hi", ft.hi, "Declared upper bound (uniform)");

  std::vector<const char*> argv{"activeinfo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string command;
    Json result;
    int status = kExitOk;
    if (ai_cmd->parsed()) {
      command = "ai";
      result = cmd_ai(ai, common);
    } else if (mx_cmd->parsed()) {
      command = "maxent";
      auto [j, converged] = cmd_maxent(mx, common);
      result = std::move(j);
      if (!converged) {
        status = kExitDomain;
        err << "error: maxent did not converge; diagnostics written\n";
      }
    } else if (dm_cmd->parsed()) {
      command = "dominance";
      result = cmd_dominance(dm, common);
    } else if (md_cmd->parsed()) {
      command = "modes";
      result = cmd_modes(md);
    } else if (ph_cmd->parsed()) {
      command = "physics";
      result = baro->parsed() ? cmd_barometric(ph) : cmd_maxwell(ph);
    } else {
      command = "fit";
      result = cmd_fit(ft, common);
    }
    const std::string text = dump_json(envelope(command, std::move(result)));
    if (common.out.empty()) {
      out << text;
    } else {
      write_file(common.out, text);
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace activeinfo::cli
