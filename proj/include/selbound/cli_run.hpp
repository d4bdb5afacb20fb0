#pragma once
// Command-line front end.  run() parses the argument list (without the
// program name), executes one command, and writes tab-separated records to
// `out`; '#'-prefixed lines are headers or per-record annotations.  Exit
// status: 0 success, 2 bad input (including unknown flags), 3 when a
// computation cannot be carried out from the supplied data.  Identical
// invocations produce byte-identical output.

#include <ostream>
#include <string>
#include <vector>

namespace selbound::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace selbound::cli
