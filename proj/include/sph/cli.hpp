#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sph {

// Exit codes: 0 success/valid, 1 mathematical failure, 2 input error,
// 3 resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sph
