#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsdc {

/// Command-line entry point. Returns 0 on success, 1 on any validation or
/// usage error, 2 when a protocol run trips the control-mode threshold.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv-style overload writing to stdout/stderr.
int run_cli(int argc, char** argv);

} // namespace qsdc
