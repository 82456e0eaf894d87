#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grady::cli {

  enum Exit : int {
    Ok           = 0,
    Internal     = 1,
    Usage        = 2,  // parse or validation failure
    Cap          = 3,
    Precondition = 4,  // ring is not epsilon-strong
    Halted       = 5,
  };

  // `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace grady::cli
