#include <iostream>
#include <string>
#include <vector>

#include "cutpoint/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const cutpoint::CommandOutcome outcome = cutpoint::run_command(args);
  std::cout << outcome.output;
  std::cerr << outcome.error;
  return outcome.exit_code;
}
