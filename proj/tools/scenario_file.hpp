#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bkit/bc/inhibition_graph.hpp"
#include "bkit/sim/script.hpp"
#include "bkit/sim/walk_and_kick.hpp"

namespace bkit::cli {

/// Syntax error in a scenario or defaults file. what() is the full
/// file:line:col diagnostic.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string file, int line, int col, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": error: " + message),
        file_(std::move(file)),
        line_(line),
        col_(col) {}

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

private:
  std::string file_;
  int line_;
  int col_;
};

enum class ExampleKind { Goalie, WalkAndKick };

std::string_view to_string(ExampleKind kind);

/// Parsed scenario document.
///
/// The textual format is line based. Header lines are `key = value` with the
/// required keys name, example (goalie | walk_and_kick), seed and duration,
/// plus optional constant overrides using the keys of
/// sim::override_keys(). Network lines `behavior <Name> <level>` and
/// `edge <Src> -> <Dst> [chaining]` may follow the header; event lines
/// `at <tick> <event> [args...]` come last, sorted by tick, with every tick
/// in [0, duration). `#` starts a comment. Unknown keys and malformed lines
/// are hard parse errors with line and column.
struct ScenarioFile {
  std::string name;
  ExampleKind example = ExampleKind::Goalie;
  std::int64_t seed = 0;
  std::int64_t duration = 0;
  std::map<std::string, double> overrides;
  std::vector<sim::WalkAndKickExtras::ExtraBehavior> behaviors;
  std::vector<bc::InhibitionEdge> edges;
  std::vector<sim::TimedEvent> events;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

ScenarioFile parse_scenario(std::string_view text, const std::string& filename = "<string>");
ScenarioFile load_scenario(const std::string& path);

/// Canonical text form: header (name, example, seed, duration, overrides
/// sorted by key), then behaviors, edges and events in stored order.
/// parse(serialize(s)) == s for every valid s.
std::string serialize_scenario(const ScenarioFile& scenario);

/// Key = value lines with the same syntax rules as scenario overrides; used
/// for the BEHAVIOR_KIT_DEFAULTS file.
std::map<std::string, double> parse_defaults_file(std::string_view text, const std::string& filename);

} // namespace bkit::cli
