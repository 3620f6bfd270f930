// cli.hpp -- the msp command-line front end
//
// Exit codes: 0 yes/valid/unique, 1 no/invalid/not-unique, 2 usage or parse
// error, 3 resource limit.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msp::cli {

enum ExitCode : int {
    kYes = 0,
    kNo = 1,
    kUsage = 2,
    kResourceLimit = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace msp::cli
