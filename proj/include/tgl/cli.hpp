#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgl {

/// Exit codes: 0 success, 1 domain error (empty split, unknown node),
/// 2 unreadable or invalid input, CLI11's codes for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgl
