#ifndef WMI_CLI_HPP
#define WMI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wmi {

/// Runs the command-line tool on already-split arguments (no argv[0]).
/// Returns the process exit status: 0 success, 1 invalid input,
/// 2 insufficient Hodge data.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs every case in <dir>/manifest.json through the dispatcher and
/// compares against the committed expected output. Returns 0 iff all pass.
int verify_fixtures(const std::string& dir, std::ostream& out, std::ostream& err);

} // namespace wmi

#endif
