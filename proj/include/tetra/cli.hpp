#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tetra::cli {

/**
 * Run one command. `args` is the argument list without the program name.
 * Results go to `out`, diagnostics to `err`.
 *
 * Exit codes: 0 for success (and verdict-true for check commands), 1 for a
 * false verdict, 2 for usage, parse or input errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
