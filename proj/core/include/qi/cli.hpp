#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qi::cli {

// Runs one command; returns the process exit code:
//   0 success, 1 mathematical failure (verification mismatch), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qi::cli
