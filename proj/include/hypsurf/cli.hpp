#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypsurf::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,      // check-relation above tolerance, solve did not converge
    kNonIntegral = 2,      // toledo: winding not within 1e-3 of an integer
    kRelationViolated = 3, // input does not satisfy the surface relation
    kBranchMismatch = 4,   // toledo --branches: some lift choice changed the value
    kUsage = 64,
    kDataError = 65,       // malformed file or matrix off SL(2,R)
    kNoInput = 66,
    kCannotCreate = 73,
};

// Runs one subcommand. `args` excludes the program name. Results go to `out`
// as `key value` lines; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypsurf::cli
