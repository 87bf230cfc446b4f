#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace activeinfo::cli {

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// RFC-4180 records: quoted fields, doubled quotes, CRLF or LF line ends.
/// Blank lines are skipped. Throws DataError on an unterminated quote.
std::vector<CsvRow> parse_csv(std::string_view text);

/// One record, quoting fields that contain separators, quotes or newlines.
std::string csv_record(const std::vector<std::string>& fields);

}  // namespace activeinfo::cli
