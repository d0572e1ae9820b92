//-----------------------------------------------------------------------------
// zirkel executable entry point; all logic lives in run_cli so tests can
// drive the CLI in-process.
//-----------------------------------------------------------------------------
#include <cstdio>
#include <string>
#include <vector>

#include "zirkel/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    zirkel::CliResult r = zirkel::run_cli(args);
    if (r.exit_code == 0)
        std::fputs(r.output.c_str(), stdout);
    else
        std::fputs(r.output.c_str(), stderr);
    return r.exit_code;
}
