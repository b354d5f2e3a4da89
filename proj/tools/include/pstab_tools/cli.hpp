#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pstab::cli {

// Runs one command. args excludes the program name. Results go to out as
// JSON; failures print {"error": ..., "message": ...} to err.
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pstab::cli
