#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorgrowth {

/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorgrowth
