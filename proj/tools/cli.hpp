#pragma once

// The `tricomi` command line, callable in-process so the output schemas can
// be tested without spawning a shell.

#include <ostream>
#include <string>
#include <vector>

namespace tricomi::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitSelftestFailed = 3;

/// Exact CSV header of `compare`.
inline constexpr const char* kCompareHeader =
    "n,alpha,z_re,z_im,region,log_exact_mod,log_exact_phase,log_asym_mod,log_asym_phase,rel_err,dropped_term_bound,flags";

/// Environment variable that overrides the default precision (256 bits);
/// an explicit --prec wins.
inline constexpr const char* kPrecisionEnv = "TRICOMI_PREC";

/// Runs the command line; args excludes the program name. Results go to out
/// (or the --output file), usage text and parse diagnostics to err, and
/// failures are reported as one JSON object {"error": {...}} on out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricomi::cli
