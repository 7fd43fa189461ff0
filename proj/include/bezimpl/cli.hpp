#ifndef BEZIMPL_CLI_HPP
#define BEZIMPL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bezimpl {

/// Runs the implicitization command line. `args` is the argument list in
/// natural order, without the program name. The implicit-curve document goes
/// to `out`; diagnostics and check reports go to `err`.
///
/// Exit status: 0 success, 1 parse/validation failure, 2 degenerate or
/// unsupported curve, 3 residual or oracle check failed.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bezimpl

#endif  // BEZIMPL_CLI_HPP
