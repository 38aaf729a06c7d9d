#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rwl::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;        // bad flags, unreadable or malformed input
inline constexpr int kDisagreement = 3; // two counting methods returned different values
inline constexpr int kSizeLimit = 4;

// Entry point shared by the rwl binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwl::cli
