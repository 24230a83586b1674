#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowlab::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kTooLarge = 3 };

/// Runs one chowlab invocation. args excludes the program name. The JSON
/// report (or a TSV table) goes to out, the human summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace chowlab::cli
