#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dseidel {

/// Command-line entry point; `args` excludes the program name.
/// Returns 0 on success, 1 on bad input, 2 when an internal check fails.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dseidel
