//-----------------------------------------------------------------------------
// Command-line front end: build figures, run scripts, analyze, render SVG,
// query constructibility, trisect angles. Pure function of its arguments so
// the whole surface is unit-testable.
//-----------------------------------------------------------------------------
#pragma once

#include <string>
#include <vector>

namespace zirkel {

struct CliResult {
    int exit_code = 0;        // 0 success, 1 domain error, 2 usage error
    std::string output;
};

// args exclude the program name. Precision comes from --digits, then the
// ZIRKEL_DIGITS environment variable, then defaults to 50 decimal digits.
CliResult run_cli(const std::vector<std::string> &args);

} // namespace zirkel
