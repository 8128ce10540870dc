#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gg::cli {

// args excludes the program name. Exit codes: 0 ok, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gg::cli
