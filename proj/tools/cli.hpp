#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdg::cli {

// Exit codes: 0 pass, 1 assertion failure, 2 input error, 3 budget exhaustion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zdg::cli
