#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/braid_word.hpp"

namespace garside::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kResourceLimit = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expands whitespace-separated signed integers with "(w)^m" repetition
/// (nested, m may be negative for the inverse). Throws UsageError on
/// malformed syntax.
std::vector<int> expand_word(std::string_view text);

/// expand_word, then range-checked against n strands.
BraidWord parse_word(int n, std::string_view text);

/// Runs the command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside::cli
