#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace borelcover {

/// Exit codes: 0 success, 1 a certification check failed, 2 parse error, 3 mathematical domain
/// error, 4 scale cap exceeded, 5 any other failure.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitScaleCap = 4;
constexpr int kExitInternal = 5;

/// Runs one command line; args[0] is the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace borelcover
