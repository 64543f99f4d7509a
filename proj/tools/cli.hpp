#pragma once

namespace oddfactor::cli {

// Dispatches the full command-line grammar.  Exit codes:
//   0  success / all instances consistent
//   1  counterexample or failed invariant found
//   2  usage or parameter error
//   3  capacity error (enumeration caps; see OVERRIDE_CAPS)
int run(int argc, const char* const argv[]);

}  // namespace oddfactor::cli
