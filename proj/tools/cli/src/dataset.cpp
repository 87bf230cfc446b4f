#include "activeinfo/cli/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "activeinfo/cli/csv.hpp"
#include "activeinfo/cli/errors.hpp"
#include "activeinfo/cli/format.hpp"

namespace activeinfo::cli {

std::uint64_t Dataset::n() const noexcept {
  if (!is_labeled()) return values.size();
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

Dataset ingest(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open data file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading data file '" + path.string() + "'");
  return parse_dataset(buf.str(), options, path.filename().string());
}

Dataset parse_dataset(std::string_view text, const IngestOptions& options, std::string source) {
  auto rows = parse_csv(text);
  if (options.header && !rows.empty()) rows.erase(rows.begin());
  if (rows.empty()) throw DataError(source + ": no data rows");

  InputFormat format = options.format;
  if (format == InputFormat::Auto) {
    format = rows.front().fields.size() == 2 ? InputFormat::Counts : InputFormat::Values;
  }

  Dataset data;
  data.source = std::move(source);
  const std::string where = data.source + ": line ";
  if (format == InputFormat::Values) {
    for (const auto& row : rows) {
      if (options.column >= row.fields.size()) {
        throw DataError(where + std::to_string(row.line) + ": missing column " + std::to_string(options.column));
      }
      double v = 0.0;
      const auto& field = row.fields[options.column];
      if (!parse_double(field, v) || !std::isfinite(v)) {
        throw DataError(where + std::to_string(row.line) + ": '" + field + "' is not a finite number");
      }
      data.values.push_back(v);
    }
    return data;
  }

  std::set<std::string> seen;
  for (const auto& row : rows) {
    if (row.fields.size() != 2) {
      throw DataError(where + std::to_string(row.line) + ": expected label,count");
    }
    std::string label(trim(row.fields[0]));
    double c = 0.0;
    if (!parse_double(row.fields[1], c) || c < 0 || c != std::floor(c) || c > 9.0e15) {
      throw DataError(where + std::to_string(row.line) + ": count '" + row.fields[1] +
                      "' is not a nonnegative integer");
    }
    if (!seen.insert(label).second) {
      throw DataError(where + std::to_string(row.line) + ": duplicate label '" + label + "'");
    }
    data.labels.push_back(std::move(label));
    data.counts.push_back(static_cast<std::uint64_t>(c));
  }
  if (data.n() == 0) throw DataError(data.source + ": all counts are zero");
  return data;
}

Pmf empirical_pmf(const Dataset& data) {
  const double n = static_cast<double>(data.n());
  if (!data.is_labeled()) {
    std::map<double, std::uint64_t> tally;
    for (double v : data.values) ++tally[v];
    std::vector<double> points, masses;
    for (auto [v, c] : tally) {
      points.push_back(v);
      masses.push_back(static_cast<double>(c) / n);
    }
    return Pmf::over_points(std::move(points), std::move(masses));
  }
  bool numeric = true;
  std::vector<double> as_numbers(data.labels.size());
  for (std::size_t i = 0; i < data.labels.size() && numeric; ++i) {
    numeric = parse_double(data.labels[i], as_numbers[i]) && std::isfinite(as_numbers[i]);
  }
  if (numeric) {
    std::map<double, double> by_value;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
      if (by_value.contains(as_numbers[i])) {
        throw DataError(data.source + ": labels '" + data.labels[i] + "' name the same value twice");
      }
      by_value[as_numbers[i]] = static_cast<double>(data.counts[i]) / n;
    }
    std::vector<double> points, masses;
    for (auto [v, m] : by_value) {
      points.push_back(v);
      masses.push_back(m);
    }
    return Pmf::over_points(std::move(points), std::move(masses));
  }
  std::vector<double> masses;
  for (auto c : data.counts) masses.push_back(static_cast<double>(c) / n);
  return Pmf::over_labels(data.labels, std::move(masses));
}

std::vector<std::pair<double, double>> weighted_values(const Dataset& data) {
  std::vector<std::pair<double, double>> out;
  if (!data.is_labeled()) {
    for (double v : data.values) out.emplace_back(v, 1.0);
    return out;
  }
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    double v = 0.0;
    if (!parse_double(data.labels[i], v) || !std::isfinite(v)) {
      throw DataError(data.source + ": label '" + data.labels[i] + "' is not numeric");
    }
    if (data.counts[i] > 0) out.emplace_back(v, static_cast<double>(data.counts[i]));
  }
  return out;
}

}  // namespace activeinfo::cli
