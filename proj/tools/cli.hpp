// Command-line front end, callable in-process for testing.

#ifndef CRYSTCOH_TOOLS_CLI_HPP_
#define CRYSTCOH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace crystcoh::cli {

/// args excludes the program name. Returns 0 on success, 1 on invalid
/// input, 2 on an internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crystcoh::cli

#endif
