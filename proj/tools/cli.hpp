#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homtop {

// Runs one CLI invocation; returns the process exit status (0 success,
// 1 usage or input error, 2 budget exhaustion with a partial report).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace homtop
