#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "activeinfo/support.hpp"

namespace activeinfo::cli {

enum class InputFormat { Auto, Values, Counts };

struct IngestOptions {
  bool header = false;
  /// Auto picks Values for one-column files and Counts for two-column files.
  InputFormat format = InputFormat::Auto;
  /// Column used by the Values format (0-based).
  std::size_t column = 0;
};

/// Either a list of real observations or a table of label,count pairs.
struct Dataset {
  std::vector<double> values;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::string source;

  bool is_labeled() const noexcept { return !labels.empty(); }
  std::uint64_t n() const noexcept;
};

Dataset ingest(const std::filesystem::path& path, const IngestOptions& options = {});
Dataset parse_dataset(std::string_view text, const IngestOptions& options, std::string source);

/// Plug-in (histogram) estimate. Value datasets give a Pmf over distinct
/// sorted values; labeled datasets give a Pmf over their labels, ordered by
/// value when every label is numeric.
Pmf empirical_pmf(const Dataset& data);

/// (value, weight) view of a dataset; labeled data needs numeric labels.
std::vector<std::pair<double, double>> weighted_values(const Dataset& data);

}  // namespace activeinfo::cli
