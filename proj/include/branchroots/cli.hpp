#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchroots {

// Command-line entry point; exits 0 iff every requested verification holds.
// Diagnostics go to err, reports to out.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchroots
