#include "activeinfo/cli/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "activeinfo/cli/errors.hpp"
#include "activeinfo/cli/format.hpp"

namespace activeinfo::cli {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void write(const Json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        write(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool scalars = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          write(v[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        write(v[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      out += std::isfinite(x) ? format_double(x) : "\"" + format_double(x) + "\"";
      return;
    }
    default:
      out += v.dump();
  }
}

const Json& require(const Json& obj, const char* key, std::string_view family) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw UsageError(std::string(family) + " spec is missing parameter '" + key + "'");
  }
  return obj.at(key);
}

double number_at(const Json& obj, const char* key, std::string_view family) {
  const Json& v = require(obj, key, family);
  if (!v.is_number()) throw UsageError(std::string(family) + " parameter '" + key + "' must be a number");
  return v.get<double>();
}

std::vector<double> numbers_at(const Json& obj, const char* key, std::string_view family) {
  const Json& v = require(obj, key, family);
  if (!v.is_array()) throw UsageError(std::string(family) + " parameter '" + key + "' must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw UsageError(std::string(family) + " parameter '" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::string> strings_at(const Json& obj, const char* key, std::string_view family) {
  const Json& v = require(obj, key, family);
  if (!v.is_array()) throw UsageError(std::string(family) + " parameter '" + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  return out;
}

Json support_params(const FiniteSupport& s) {
  Json j = Json::object();
  if (s.is_ordered()) {
    Json pts = Json::array();
    for (double x : s.points()) pts.push_back(x);
    j["points"] = std::move(pts);
  } else {
    j["labels"] = s.labels();
  }
  return j;
}

bool is_indexed(const FiniteSupport& s) {
  if (s.is_ordered()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.labels()[i] != std::to_string(i + 1)) return false;
  }
  return true;
}

// "a=1,b=2" -> {"a": 1, "b": 2}
Json compact_params(std::string_view body, std::string_view spec) {
  Json params = Json::object();
  if (trim(body).empty()) return params;
  for (const auto& part : split(body, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("malformed parameter '" + part + "' in '" + std::string(spec) + "'");
    std::string key(trim(std::string_view(part).substr(0, eq)));
    double value = 0.0;
    if (!parse_double(std::string_view(part).substr(eq + 1), value)) {
      throw UsageError("parameter '" + key + "' in '" + std::string(spec) + "' is not a number");
    }
    if (key == "n") {
      params[key] = static_cast<std::int64_t>(value);
      if (value != std::floor(value)) throw UsageError("parameter 'n' must be an integer");
    } else {
      params[key] = value;
    }
  }
  return params;
}

Interval parse_interval_body(std::string_view body, std::string_view spec) {
  body = trim(body);
  Interval i;
  if (!body.empty() && (body.front() == '[' || body.front() == '(')) {
    i.lo_closed = body.front() == '[';
    if (body.back() != ']' && body.back() != ')') {
      throw UsageError("unbalanced interval brackets in target '" + std::string(spec) + "'");
    }
    i.hi_closed = body.back() == ']';
    body = body.substr(1, body.size() - 2);
  }
  auto parts = split(body, ',');
  if (parts.size() != 2 || !parse_double(parts[0], i.lo) || !parse_double(parts[1], i.hi)) {
    throw UsageError("interval target '" + std::string(spec) + "' needs two numbers lo,hi");
  }
  return i;
}

Target parse_leaf(std::string_view leaf, std::string_view spec) {
  leaf = trim(leaf);
  auto colon = leaf.find(':');
  if (colon == std::string_view::npos) throw UsageError("target '" + std::string(spec) + "' has no kind prefix");
  auto kind = leaf.substr(0, colon);
  auto body = leaf.substr(colon + 1);
  if (kind == "set") {
    std::vector<std::string> atoms;
    for (const auto& a : split(body, ',')) atoms.emplace_back(trim(a));
    return Target::atoms(std::move(atoms));
  }
  if (kind == "le" || kind == "gt") {
    double x = 0.0;
    if (!parse_double(body, x)) throw UsageError("target '" + std::string(spec) + "' needs a number");
    return kind == "le" ? Target::at_most(x) : Target::greater_than(x);
  }
  if (kind == "interval") return Target(parse_interval_body(body, spec));
  throw UsageError("unknown target kind '" + std::string(kind) + "' (expected set, le, gt, interval)");
}

}  // namespace

std::string dump_json(const Json& value) {
  std::string out;
  write(value, out, 0);
  out += "\n";
  return out;
}

Json envelope(std::string_view command, Json result) {
  Json j = Json::object();
  j["schema"] = kSchema;
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

Json to_json(const Distribution& d) {
  Json j = Json::object();
  std::visit(Overloaded{
                 [&j](const Equiprobable& e) {
                   j["family"] = "equiprobable";
                   if (is_indexed(e.support())) {
                     j["params"] = Json{{"n", e.n()}};
                   } else {
                     j["params"] = support_params(e.support());
                   }
                 },
                 [&j](const UniformInterval& u) {
                   j["family"] = "uniform";
                   j["params"] = Json{{"a", u.a()}, {"b", u.b()}};
                 },
                 [&j](const Geometric& g) {
                   j["family"] = "geometric";
                   j["params"] = Json{{"mu", g.mean()}};
                 },
                 [&j](const Exponential& e) {
                   j["family"] = "exponential";
                   j["params"] = Json{{"mu", e.mean()}};
                 },
                 [&j](const Normal& n) {
                   j["family"] = "normal";
                   j["params"] = Json{{"mu", n.mean()}, {"sigma2", n.variance()}};
                 },
                 [&j](const Pmf& p) {
                   j["family"] = "pmf";
                   Json params = support_params(p.support());
                   Json masses = Json::array();
                   for (double m : p.masses()) masses.push_back(m);
                   params["masses"] = std::move(masses);
                   j["params"] = std::move(params);
                 },
             },
             d.variant());
  return j;
}

Distribution distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw UsageError("distribution spec needs a string 'family'");
  }
  const std::string family = j["family"].get<std::string>();
  const Json params = j.contains("params") ? j["params"] : Json::object();

  if (family == "equiprobable") {
    if (params.contains("points")) {
      return Equiprobable(FiniteSupport::ordered(numbers_at(params, "points", family)));
    }
    if (params.contains("labels")) {
      return Equiprobable(FiniteSupport::labeled(strings_at(params, "labels", family)));
    }
    const double n = number_at(params, "n", family);
    if (n < 1 || n != std::floor(n)) throw InvalidParameter("equiprobable n must be a positive integer");
    return Equiprobable(static_cast<std::size_t>(n));
  }
  if (family == "uniform") return UniformInterval(number_at(params, "a", family), number_at(params, "b", family));
  if (family == "geometric") return Geometric(number_at(params, "mu", family));
  if (family == "exponential") {
    if (params.contains("rate")) {
      const double rate = number_at(params, "rate", family);
      if (!(rate > 0.0)) throw InvalidParameter("exponential rate must be > 0");
      return Exponential(1.0 / rate);
    }
    return Exponential(number_at(params, "mu", family));
  }
  if (family == "normal") return Normal(number_at(params, "mu", family), number_at(params, "sigma2", family));
  if (family == "pmf") {
    auto masses = numbers_at(params, "masses", family);
    if (params.contains("points")) return Pmf::over_points(numbers_at(params, "points", family), std::move(masses));
    return Pmf::over_labels(strings_at(params, "labels", family), std::move(masses));
  }
  throw UsageError("unknown distribution family '" + family + "'");
}

Distribution parse_distribution(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw UsageError("empty distribution spec");
  if (spec.front() == '@') {
    std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw IoError("cannot read distribution file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_distribution(buf.str());
  }
  if (spec.front() == '{') {
    Json j = Json::parse(spec, nullptr, false);
    if (j.is_discarded()) throw UsageError("distribution spec is not valid JSON");
    return distribution_from_json(j);
  }
  auto colon = spec.find(':');
  Json j = Json::object();
  j["family"] = std::string(trim(spec.substr(0, colon)));
  j["params"] = colon == std::string_view::npos ? Json::object() : compact_params(spec.substr(colon + 1), spec);
  return distribution_from_json(j);
}

Target parse_target(std::string_view spec) {
  auto parts = split(spec, '|');
  if (parts.size() == 1) return parse_leaf(parts[0], spec);
  UnionOf u;
  for (const auto& p : parts) u.parts.push_back(parse_leaf(p, spec));
  return Target(std::move(u));
}

Json to_json(const InfoReport& r) {
  Json j = Json::object();
  j["unit"] = to_string(r.unit);
  j["endogenous"] = r.endogenous;
  j["exogenous"] = r.exogenous;
  j["active"] = r.active;
  j["baseline_prob"] = r.baseline_prob;
  j["alternative_prob"] = r.alternative_prob;
  return j;
}

Json to_json(const DominanceReport& r) {
  Json j = Json::object();
  j["dominated"] = r.dominated;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["checked_points"] = r.checked_points;
  j["grid"] = r.grid;
  return j;
}

Json to_json(const Pmf& p) {
  Json j = support_params(p.support());
  Json masses = Json::array();
  for (double m : p.masses()) masses.push_back(m);
  j["masses"] = std::move(masses);
  return j;
}

}  // namespace activeinfo::cli
