#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpo::cli {

// Exit status protocol shared by every verb.
enum Status : int {
  kTrue = 0,     // predicate held / query answered positively
  kFalse = 1,    // predicate failed / negative answer
  kUsage = 2,    // bad invocation, unreadable or malformed input
  kInternal = 3, // self-check failure or saturation safety valve
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace wpo::cli
