#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcat::cli {

/// Runs one command line (program name excluded). Returns the exit status:
/// 0 success, 1 bad input, 2 a checked identity failed.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Names accepted by `map --name`.
std::vector<std::string> map_names();

}  // namespace coxcat::cli
