#pragma once

// Command dispatch for the monoidkit tool. Exit codes: 0 success,
// 1 verification failure, 2 usage or parse errors.

#include <iostream>
#include <string>
#include <vector>

namespace monoidkit {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoidkit
