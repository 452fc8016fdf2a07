#ifndef MONOCI_CLI_HPP
#define MONOCI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace monoci {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_resource = 3 };

/// The monoci command line, without argv[0]. Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoci

#endif
