#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kinval {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error,
/// 2 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kinval
