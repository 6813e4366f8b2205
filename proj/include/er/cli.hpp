#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace er {

// Runs one command line (argv without the program name): the report_v1 JSON
// document goes to `out` (or the --out file), diagnostics to `err`. Returns
// the process exit code: 0 all checks passed, 1 a check failed or a resource
// guard tripped (reason "budget"), 2 usage error.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Re-serializes a report with the top-level "timings" object removed, for
// byte-comparing two runs of the same command.
std::string strip_timings_json(const std::string& report_text);

}  // namespace er
