#pragma once

#include <ostream>

#include "qwc/cli/config.hpp"
#include "qwc/cli/verify.hpp"

namespace qwc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadConfig = 2;

/// Each writes its artifact to `os`.
void cmd_ld(const RunConfig& cfg, std::ostream& os);
void cmd_rdcm(const RunConfig& cfg, std::ostream& os);
void cmd_simulate(const RunConfig& cfg, std::ostream& os);
void cmd_temp(const RunConfig& cfg, std::ostream& os);

/// Parses argv, dispatches, and maps failures to exit codes. Artifacts go
/// to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwc::cli
