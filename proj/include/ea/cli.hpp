#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ea::cli {

/// Dispatches one CLI invocation. Exit status: 0 when every check passed,
/// 1 when checks ran and found violations or countermodels (the report
/// always carries a concrete witness), 2 for usage or format errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ea::cli
