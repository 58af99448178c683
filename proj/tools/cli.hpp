#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surd::cli {

/// Exit codes: 0 success, 1 theorem violation, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surd::cli
