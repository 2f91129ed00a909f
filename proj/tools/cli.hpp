#pragma once

// Command-line front end: sbe <solve|kernelize|generate|reduce|verify|bench|export-network>.

#include <iosfwd>
#include <string>
#include <vector>

namespace swapbribery {

/// args excludes the program name. Exit status: 0 yes / success, 1 no,
/// 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swapbribery
