#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpw {

inline constexpr const char* kToolVersion = "0.1.0";

// Full command-line driver; returns the process exit code:
// 0 success, 1 usage, 2 parse/schema, 3 semantic, 4 capacity.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cpw
