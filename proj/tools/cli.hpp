#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infloc::cli {

/// Exit status of run().
enum Status : int { ok = 0, invalid_input = 1, alarm = 2 };

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infloc::cli
