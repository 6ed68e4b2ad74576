#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diskgeo::cli {

/// Exit codes: 0 success, 1 domain error (JSON error object on `out`),
/// 2 usage error (message and help on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diskgeo::cli
