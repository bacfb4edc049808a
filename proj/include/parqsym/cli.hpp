#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parqsym {

// Runs the batch CLI. Exit codes: 0 success (all checks pass), 1 check
// failure, 2 malformed input, 3 invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parqsym
