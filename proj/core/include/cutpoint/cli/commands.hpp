#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cutpoint/automata/automaton.hpp"

namespace cutpoint {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;  // also malformed input documents
inline constexpr int kExitNotFound = 3;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string output;  // report for stdout
  std::string error;   // diagnostics for stderr
};

// args excludes the program name.
CommandOutcome run_command(const std::vector<std::string>& args);

// Header m,value_exact,value_float then one row per m = 0..max_length.
// value_exact is empty for binary64 automata. Returns the data row count.
std::size_t emit_csv(const Automaton& aut, std::size_t max_length, std::ostream& sink);

}  // namespace cutpoint
