#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bicentrality/transform.hpp"

namespace bicentrality::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrParse = 1,
  kPrecondition = 2,
  kNoConvergence = 3,
};

/// Runs one subcommand (nebs, necs, check, baseline, construct-reverse).
/// `args` excludes the program name. Reports go to `out`, diagnostics to
/// `err`; an input path of "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

/// Parses identity | reciprocal | scale:<g> | power:<p> | table:<path>.
/// Table files are read from disk, or from `in` for "table:-".
ReverseTransform parse_phi(const std::string& spec, std::istream& in);

}  // namespace bicentrality::cli
