#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace dealmix::cli {

// A result table. Numeric columns become JSON numbers; everything else stays a string.
struct Table {
  std::vector<std::string> columns;
  std::vector<bool> numeric;
  std::vector<std::vector<std::string>> rows;
  // trailing key=value lines (CSV comments, a JSON object)
  std::vector<std::pair<std::string, std::string>> notes;

  void column(std::string name, bool is_numeric) {
    columns.push_back(std::move(name));
    numeric.push_back(is_numeric);
  }
};

// `header` is the full command line; it goes first in both formats.
void write_table(std::ostream& out, const Table& table, OutputFormat format, const std::string& header);

}  // namespace dealmix::cli
