#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twobridge::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { kApplies = 0, kInapplicable = 1, kInvalid = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckItem {
    std::int64_t j;
    std::string name;
    bool pass;
    std::string detail;
};

/// The family reproduction checklist for j = 1..j_max.
std::vector<CheckItem> family_checklist(std::int64_t j_max);

}  // namespace twobridge::cli
