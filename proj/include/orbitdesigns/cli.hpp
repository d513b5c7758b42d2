#pragma once
// Command-line front end: subcommand dispatch, configuration plumbing, and
// structured (json | csv | text) output for every library operation.

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitdesigns {

// Runs one invocation, e.g. run_cli({"molien", "--type", "B", "--rank", "2",
// "--lmax", "8"}, std::cout, std::cerr).  Returns the process exit code:
//   0  success
//   1  verification failure (a check ran and did not pass)
//   2  usage error (unknown flags, malformed or missing files, bad values)
// Global flags: --format json|csv|text, --precision BITS, --tol-exp E,
// --rank-cap N.  The ORBIT_DESIGNS_PRECISION environment variable overrides
// the precision.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace orbitdesigns
