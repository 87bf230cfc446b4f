#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "activeinfo/active_info.hpp"
#include "activeinfo/distributions.hpp"
#include "activeinfo/dominance.hpp"
#include "activeinfo/target.hpp"

namespace activeinfo::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "activeinfo/1";

/// Pretty-printed, key order preserved, doubles at 17 significant digits,
/// non-finite doubles as the strings "inf" / "-inf" / "nan". Ends with a newline.
std::string dump_json(const Json& value);

/// {"schema": "activeinfo/1", "command": ..., "result": ...}
Json envelope(std::string_view command, Json result);

// Distribution specs.
//
// JSON form: {"family": "<name>", "params": {...}} with
//   equiprobable {"n"} | {"labels": [...]} | {"points": [...]}
//   uniform      {"a", "b"}
//   geometric    {"mu"}
//   exponential  {"mu"} or {"rate"}
//   normal       {"mu", "sigma2"}
//   pmf          {"points" | "labels", "masses"}
// Compact form: "family:key=value,key=value", e.g. "exponential:rate=1.5".
// A leading '@' reads the JSON form from a file.
Json to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);
Distribution parse_distribution(std::string_view spec);

/// "set:a,b,c" | "le:x" | "gt:x" | "interval:lo,hi" (closed) or
/// "interval:[lo,hi)" style brackets; parts joined by '|' form a union.
Target parse_target(std::string_view spec);

Json to_json(const InfoReport& r);
Json to_json(const DominanceReport& r);
Json to_json(const Pmf& p);

}  // namespace activeinfo::cli
