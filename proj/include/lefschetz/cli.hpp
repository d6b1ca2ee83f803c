#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz {

// Command-line entry point, testable without a process boundary.
// Exit codes: 0 success, 1 usage or precondition error, 2 internal
// consistency failure (cross-checked quantities disagree).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz
