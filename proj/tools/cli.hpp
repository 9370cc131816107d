#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbt::cli {

/// Runs the gbt command line. Machine output (JSON) goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain or usage
/// error, 2 when a resource guard trips.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbt::cli
