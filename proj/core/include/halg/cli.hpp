#pragma once

namespace halg {

// Entry point for the `halg` command-line tool.  Returns the process exit
// code: 0 when every requested check passes (indeterminate results included),
// 1 when some check fails, 2 on usage errors.
int run_cli(int argc, char** argv);

}  // namespace halg
