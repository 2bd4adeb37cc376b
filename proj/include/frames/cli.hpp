#pragma once

// Batch command-line surface.  run() is the whole CLI as a library function
// so the binary stays a thin wrapper and tests can drive it in process.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 domain errors
// (REFUSED, RATIO_ONE, prime mismatches, ...).

#include <iosfwd>
#include <string>
#include <vector>

namespace frames::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frames::cli
