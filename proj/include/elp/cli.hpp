#ifndef ELP_CLI_HPP
#define ELP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace elp::cli {

/// Runs one elpsplit invocation. `args` excludes the program name.
/// Exit codes: 0 success (including "no world views"), 1 corpus check
/// failures, 2 usage error, 3 parse error, 4 invalid splitting set,
/// 5 cap exceeded.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace elp::cli

#endif
