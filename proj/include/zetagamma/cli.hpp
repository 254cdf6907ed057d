#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zg::cli {

/// Exit codes: 0 success, 2 usage or input errors, 3 rejected query,
/// 4 internal inconsistency. Errors go to `err` as "error[<kind>]: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zg::cli
