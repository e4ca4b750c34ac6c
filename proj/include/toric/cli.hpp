#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric {

// Batch front end. Returns the process exit code: 0 success, 1 computation
// fault, 2 input error.  Output goes to `out` (JSON by default), diagnostics
// to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
