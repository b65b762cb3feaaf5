#pragma once
// Command-line front end: classification, dual-family solving, double
// construction, catalog verification, pretty-printing, and JSON export.

#include <iosfwd>
#include <string>
#include <vector>

namespace cli {

// Runs the tool on the given arguments (program name excluded), writing to
// the given streams.  Returns the process exit code: 0 success, 1
// verification failure, 2 usage/schema/constraint error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cli
