#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace bkit::cli {

// Exit codes shared by every verb: 0 success, 1 scenario/framework error,
// 2 parse error. The set is exhaustive and mutually exclusive.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitParse = 2;

struct RunFlags {
  std::optional<std::int64_t> steps;
  std::optional<std::int64_t> seed;
  std::optional<std::string> trace_path;
  bool quiet = false;
};

/// Runs the scenario and writes the trace to trace_path (or to out when no
/// path is given). A summary goes to err unless quiet.
int cmd_run(const std::string& scenario_path, const RunFlags& flags, std::ostream& out,
            std::ostream& err);

/// Compiles the scenario's inhibition network and writes DOT text to
/// dot_path (or to out). Goalie scenarios are rejected.
int cmd_graph(const std::string& scenario_path, const std::optional<std::string>& dot_path,
              std::ostream& out, std::ostream& err);

/// Parses and compiles without running; prints nothing on success.
int cmd_validate(const std::string& scenario_path, std::ostream& out, std::ostream& err);

/// Full command-line entry point (subcommand dispatch included).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bkit::cli
