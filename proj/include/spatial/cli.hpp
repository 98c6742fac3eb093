#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spatial::cli {

// Exit codes: 0 success, 1 an identity check failed, 2 malformed input or usage.
enum ExitCode { kOk = 0, kIdentityFailure = 1, kBadInput = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spatial::cli
