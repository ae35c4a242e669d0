#include <iostream>

#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
  using namespace dealmix::cli;
  RunConfig config;
  try {
    config = parse_run_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const UsageError& e) {
    (e.help ? std::cout : std::cerr) << (e.help ? "" : "error: ") << e.message << '\n';
    return e.exit_code;
  }
  return run_and_report(config, std::cout, std::cerr);
}
