#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dealmix::cli {

enum class OutputFormat { kCsv, kJson };

// Everything a run depends on. Zero players/hand means "infer".
struct RunConfig {
  std::string subcommand;
  std::string composition;
  std::string deck;
  std::string method = "backforth";
  std::vector<std::string> methods;
  int players = 0;
  int hand = 0;
  int cards = 52;
  std::vector<std::int64_t> a = {2};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int oracle_cap = 10;
  std::string objective = "metric";
  std::string strategy = "local";
  std::uint64_t budget = 10000;
  int search_cap = 16;
  std::string per_hand;
  std::string out;
  OutputFormat format = OutputFormat::kCsv;
  unsigned threads = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Canonical command line: subcommand, then every option the subcommand reads.
std::string to_string(const RunConfig& config);

// Thrown for bad command lines; `help` is set when usage was requested instead.
struct UsageError {
  int exit_code;
  std::string message;
  bool help = false;
};

RunConfig parse_run_config(const std::vector<std::string>& args);
RunConfig parse_run_config(const std::string& command_line);

std::vector<std::string> subcommands();

}  // namespace dealmix::cli
