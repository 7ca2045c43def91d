#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubkit {

/// Runs the command line on `args` (without the program name). Returns
/// 0 when every requested check passes, 1 on a failed check, 2 on a usage
/// error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubkit
