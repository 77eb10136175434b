#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace species {

// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kViolated = 1, kUsage = 2 };

// Runs the command line `species <args...>` (args exclude the program name).
// Subcommands: enumerate, dim, mu, delta, antipode, verify, interp.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// n_max after applying the SPECIES_MAX_N cap (default 4) of the environment.
std::size_t capped_max_n(std::size_t requested);

}  // namespace species
