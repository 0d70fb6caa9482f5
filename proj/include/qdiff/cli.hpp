#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiff {

/// Run the qdiff command-line front end on the given argument list
/// (excluding the program name), reading any `-` spec input from `in` and
/// writing reports to `out` and diagnostics to `err`.
///
/// Exit codes: 0 when the requested computation or verification succeeds,
/// 1 when a verification ran to completion and found failures, 2 for usage
/// errors, unreadable input, or exceeded work caps.  Output is
/// byte-deterministic for identical inputs.
int run_qdiff(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out, std::ostream& err);

} // namespace qdiff
