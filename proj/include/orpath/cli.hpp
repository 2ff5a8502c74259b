#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orpath {

// Exit codes: 0 success, 1 verification claim failure, 2 usage error.
int cli_dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orpath
