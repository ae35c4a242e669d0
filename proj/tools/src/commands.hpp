#pragma once

#include <ostream>

#include "run_config.hpp"

namespace dealmix::cli {

// Runs one subcommand. Output goes to config.out when set, otherwise to `out`.
// Library errors (InvalidInput, ScaleExceeded) propagate to the caller.
void run(const RunConfig& config, std::ostream& out);

// 0 ok, 2 bad input, 3 too large; other failures give 1. Messages go to `err`.
int run_and_report(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dealmix::cli
