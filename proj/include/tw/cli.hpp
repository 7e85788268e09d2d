#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tw {

// Exit codes: 0 success, 2 input error, 3 internal cross-check violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tw
