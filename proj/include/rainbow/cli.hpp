#pragma once

#include <ostream>

namespace rainbow {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitWitness = 0,
  kExitNone = 1,
  kExitUnknown = 2,
  kExitUsage = 64,
  kExitMalformed = 65,
  kExitInternal = 70,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rainbow
