#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lag2::cli {

// Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 consistency failure or precision limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lag2::cli
