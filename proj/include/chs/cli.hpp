#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chs::cli {

/// Exit codes of run().
enum Exit : int { Ok = 0, Domain = 1, Usage = 2 };

/// args excludes the program name. Machine output goes to out, diagnostics
/// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chs::cli
