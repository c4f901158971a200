#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwpcli {

/// Runs one gwpkit command.  `args` excludes the program name.  Returns the
/// exit code: 0 success or member, 1 non-member or a failed check, 2 error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace gwpcli
