#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symlen::cli {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kBudgetExhausted = 2,
  kCheckFailed = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symlen::cli
