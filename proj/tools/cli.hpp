#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numfun::cli {

/// One leaf of the dispatch table.
struct CommandInfo {
    std::string path;                 ///< e.g. "arakelov pair"
    std::string usage;                ///< positional arguments
    std::vector<std::string> reaches; ///< library operations the command calls
};

const std::vector<CommandInfo>& command_table();

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace numfun::cli
