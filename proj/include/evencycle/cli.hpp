#ifndef EVENCYCLE_CLI_HPP
#define EVENCYCLE_CLI_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace evencycle {

inline constexpr const char* kToolName = "evencycle";
inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Environment variable read for the worker thread count.
inline constexpr const char* kWorkersEnv = "EVENCYCLE_WORKERS";

struct CliHooks {
    /// Runs the acceptance suite for a tier ("fast", "slow", "all") and
    /// returns an exit status.
    std::function<int(const std::string& tier, std::ostream& out)> accept;
};

/// Parses and runs one command. `args` excludes the program name. Artifacts
/// without an explicit path go to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace evencycle

#endif
