#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regdec::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kResource = 3,
};

/// Runs one command line. `args` excludes the program name; "-" file
/// arguments read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace regdec::cli
