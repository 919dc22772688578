#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

/// Exit statuses of frobctl.
enum Status : int { kPass = 0, kNegative = 1, kInputError = 2 };

/**
 * Runs one frobctl command. `args` excludes the program name. Reports go
 * to `out` (or to --out), diagnostics to `err`.
 **/
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace frob::cli
