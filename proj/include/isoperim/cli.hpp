#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoperim::cli {

/// Runs one command-line request (the argument list excludes the program
/// name) and writes the requested document to `out`; diagnostics go to
/// `err`.  Exit codes: 0 success, 1 usage error, 2 violated precondition,
/// 3 numerical non-convergence, 4 failed verification property.
///
/// Identical argument lists produce bit-identical output: every random
/// draw comes from the seeded generator echoed in the document, and no
/// wall-clock or locale state enters the formatting.  `--out FILE` writes
/// the document to a file instead of `out`, `--format json|csv` selects
/// the encoding, `--grid N` overrides discretization sizes, `--tol X`
/// makes a command fail (exit 3) unless its achieved error estimate meets
/// X, and ISOPERIM_THREADS caps sweep parallelism.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace isoperim::cli
