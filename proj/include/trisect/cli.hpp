#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trisect {

// Exit codes of the command line tool.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;  // validation or parse failure
constexpr int kExitUsage = 2;    // bad arguments, unreadable files
constexpr int kExitBudget = 3;   // enumeration stopped at its budget

// Runs one command line (args exclude the program name). Regular output goes
// to `out`, reports and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisect
