#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supermod::cli {

// Dispatches a full command line (without argv[0]). Returns the process exit
// status: 0 success, 1 failed verification, 2 argument or domain errors.
// All report output goes to `out`, diagnostics to `err`. Identical inputs
// produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace supermod::cli
