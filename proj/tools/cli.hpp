#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdl::cli {

/// Runs one `fdl` invocation; args exclude the program name.
/// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdl::cli
