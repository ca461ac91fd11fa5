#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pseudoconvex::cli {

// Process exit codes.
enum class Status { ok = 0, negative = 1, premise_violated = 2, input_error = 3, internal_error = 4 };

struct Environment {
  // Value of PSEUDOCONVEX_MAX_N, if set.
  std::optional<std::string> max_n;
};

// Runs one command line (without the program name). Reads stdin from `in` unless --input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace pseudoconvex::cli
