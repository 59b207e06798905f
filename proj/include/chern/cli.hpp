#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace chern {

/// Runs the command-line front end. Exit code 0 on success, 1 on input
/// errors, 2 on theorem violations.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// The 13-row reference table (byte-stable across runs and platforms).
std::string reference_table(const std::string& format);

}  // namespace chern
