#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hahn::cli {

/// Runs one `hahn` invocation. Returns 0 on success, 1 on a domain error
/// (error JSON written to `err`), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hahn::cli
