#ifndef NILALG_CLI_HPP
#define NILALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nilalg::cli {

/// Runs one `nilcalc` invocation; `args` excludes the program name.
/// Returns 0 when every requested check passes, 1 on a failed check or a
/// computation precondition failure, 2 on usage errors and malformed input.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nilalg::cli

#endif
