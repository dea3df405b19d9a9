#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclelab::cli {

// Exit codes: 0 success, 2 usage, 3 data error, 4 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitInternal = 4;

struct RunConfig {
    std::string command;
    unsigned l = 0;
    unsigned n = 0;
    int m = 1;
    long long limit = 0;
    std::string seq = "n-x";  // n-x | x
    std::string zeros_path;
    std::size_t count = 2000;
    std::string signature;  // e.g. "1,1"; empty = emit curves
    std::string input_path;
    std::string target = "basis";  // basis | maxfactor
    std::string output_path;       // empty = stdout
    std::string format = "csv";    // csv | json
    unsigned brute_limit = 20;
    bool reduce = false;
};

/// Parse argv (without the program name). Throws UsageError on bad input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HelpRequested : UsageError {
    using UsageError::UsageError;
};

RunConfig parse_args(const std::vector<std::string>& argv);

/// Dispatch a validated config. Writes the one-line summary to `out` and any
/// tabular payload to config.output_path (or `out` when no path is given).
/// Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Convenience entry point used by main().
int main_impl(int argc, const char* const* argv);

}  // namespace cyclelab::cli
