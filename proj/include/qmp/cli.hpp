#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmp {

/// Command-line entry point. Records are written to `out` as one JSON object
/// per line; human-oriented diagnostics go to `err`. Exit codes: 0 success or
/// satisfied, 1 violation or failed search, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace qmp
