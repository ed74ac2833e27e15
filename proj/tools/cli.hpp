#pragma once

#include <ostream>
#include <vector>

#include "weilheis/report.hpp"

namespace weilheis::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kUsage = 2 };

/// The verify command. Reports go to `out` (or the --out file), diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// {"schema": 1, "pass": ..., "reports": [...]}.
Json bundle_json(const std::vector<VerdictReport>& reports);
std::string render_text(const std::vector<VerdictReport>& reports);

}  // namespace weilheis::cli
