#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpc::cli {

/// Runs the dpcolor command line. `args` excludes the program name.
/// Exit codes: 0 affirmative (colorable / valid / critical / consistent),
/// 1 negative, 2 usage or I/O error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dpc::cli
