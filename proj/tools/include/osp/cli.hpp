#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osp::cli {

// exit codes of the osp tool
enum Exit : int { ok = 0, verification_failed = 1, usage_error = 2, resource_error = 3 };

// parse argv (argv[0] is the program name), run the subcommand, write the report to out or --out
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osp::cli
