// cli.hpp -- command-line front end, callable in-process for testing

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graycode::cli {

/// Runs one CLI invocation. args is argv without the program name; in
/// supplies what the real tool reads from stdin. Returns the process exit
/// status: 0 on success, 1 when the maths says no (bad input values, failed
/// verification, refused sizes), 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace graycode::cli
