#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hybrid::cli {

inline constexpr const char* kSchemaVersion = "hybridsd/1";

/// Exit codes: 0 success, 1 validation or usage error, 2 invariant failure
/// during `check` (or any other internal failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hybrid::cli
