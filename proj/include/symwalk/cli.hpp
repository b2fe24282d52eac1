// Command-line front end.
//
//   symwalk <subcommand> [flags] [--format csv|json] [--out PATH]
//
// Exit codes: 0 success, 2 usage error, 1 resource-guard refusal or
// internal failure. SYMWALK_MAX_N raises every size guard to its value.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symwalk {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace symwalk
