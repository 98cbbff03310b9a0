#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mulideal::cli {

// Runs one subcommand. args excludes the program name.
// Exit codes: 0 success, 1 parse/usage error, 2 domain error (the error
// object {"error": {"kind", "message"}} goes to err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mulideal::cli
