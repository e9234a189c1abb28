#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotgraph {

/// Comma-separated table. Fields may be double-quoted; a doubled quote
/// inside quotes is a literal quote. Both \n and \r\n end a record.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of `name` in the header, or -1.
  int column(std::string_view name) const;
};

/// Throws ParseError on an unterminated quote or an empty input.
CsvTable parse_csv(std::string_view text);

}  // namespace knotgraph
