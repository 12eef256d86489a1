#ifndef HNBETTI_CLI_HPP
#define HNBETTI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hnbetti::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidArgument = 2,
    kExitCheckFailure = 3,
    kExitCacheWarning = 4,
};

// args excludes the program name. The rendered document goes to out,
// diagnostics and warnings to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hnbetti::cli

#endif  // HNBETTI_CLI_HPP
