#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algpath::cli {

// Runs one CLI invocation. `args` holds the arguments after the program
// name; `in` backs the '-' input convention. Returns the process exit
// code: 0 on success, 1 on a module error (reported on `err` as
// "error: <Kind>: <message>"), 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace algpath::cli
