#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsw::cli {

// Runs one command. Exit codes: 0 success, 1 verification failure or cap
// exceeded, 2 usage/parse error. The JSON report lands on `out` (or the file
// named by --out); diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace tsw::cli
