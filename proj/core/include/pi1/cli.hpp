#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pi1 {

// Command line front end. Exit codes: 0 on success, 1 on mathematical
// failure (a sequence that is not exact, a failed verification suite), 2 on
// input errors (unknown verbs, malformed files, axiom violations).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pi1
