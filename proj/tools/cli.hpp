#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjsem::cli {

/// Runs one CLI invocation.  Exit code 0 on a mathematical yes/Holds, 1 on
/// no/Fails, 2 on usage or format errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adjsem::cli
