// Command-line front end. Exit status: 0 success, 1 invalid input or a failed
// verification check, 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgames::cli {

/// `args` excludes the program name. Instances are read from `--in <file>`,
/// or from `in` when the flag is absent or `-`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tgames::cli
