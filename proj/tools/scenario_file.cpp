#include "scenario_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bkit/sim/defaults.hpp"

namespace bkit::cli {

namespace {

struct Token {
  std::string_view text;
  int col = 1;
};

// Tokenizes one line: whitespace separated, comment stripped.
std::vector<Token> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class LineParser {
public:
  LineParser(const std::string& filename, int line_no) : filename_(filename), line_no_(line_no) {}

  [[noreturn]] void fail(int col, const std::string& message) const {
    throw ParseError(filename_, line_no_, col, message);
  }

  std::int64_t parse_int(const Token& token, const char* what) const {
    std::int64_t value = 0;
    const auto* first = token.text.data();
    const auto* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      fail(token.col, std::string("expected ") + what + ", got '" + std::string(token.text) + "'");
    return value;
  }

  double parse_double(const Token& token, const char* what) const {
    double value = 0.0;
    const auto* first = token.text.data();
    const auto* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      fail(token.col, std::string("expected ") + what + ", got '" + std::string(token.text) + "'");
    return value;
  }

  std::string parse_ident(const Token& token, const char* what) const {
    const std::string_view t = token.text;
    bool ok = !t.empty() && (std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_');
    for (std::size_t i = 1; ok && i < t.size(); ++i) {
      const char c = t[i];
      ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }
    if (!ok) fail(token.col, std::string("expected ") + what + ", got '" + std::string(t) + "'");
    return std::string(t);
  }

private:
  const std::string& filename_;
  int line_no_;
};

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

bool is_header_line(const std::vector<Token>& tokens) {
  return tokens.size() == 3 && tokens[1].text == "=";
}

} // namespace

std::string_view to_string(ExampleKind kind) {
  return kind == ExampleKind::Goalie ? "goalie" : "walk_and_kick";
}

ScenarioFile parse_scenario(std::string_view text, const std::string& filename) {
  ScenarioFile out;
  bool have_name = false, have_example = false, have_seed = false, have_duration = false;
  enum class Phase { Header, Network, Events } phase = Phase::Header;
  int last_header_line = 0;

  std::istringstream stream{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const auto tokens = tokenize(raw_line);
    if (tokens.empty()) continue;
    LineParser lp(filename, line_no);

    if (is_header_line(tokens)) {
      if (phase != Phase::Header) lp.fail(tokens[0].col, "header line after the header section ended");
      const std::string key = lp.parse_ident(tokens[0], "header key");
      const Token& value = tokens[2];
      if (key == "name") {
        if (have_name) lp.fail(tokens[0].col, "duplicate key 'name'");
        out.name = lp.parse_ident(value, "scenario name");
        have_name = true;
      } else if (key == "example") {
        if (have_example) lp.fail(tokens[0].col, "duplicate key 'example'");
        if (value.text == "goalie") out.example = ExampleKind::Goalie;
        else if (value.text == "walk_and_kick") out.example = ExampleKind::WalkAndKick;
        else lp.fail(value.col, "example must be 'goalie' or 'walk_and_kick'");
        have_example = true;
      } else if (key == "seed") {
        if (have_seed) lp.fail(tokens[0].col, "duplicate key 'seed'");
        out.seed = lp.parse_int(value, "integer seed");
        have_seed = true;
      } else if (key == "duration") {
        if (have_duration) lp.fail(tokens[0].col, "duplicate key 'duration'");
        out.duration = lp.parse_int(value, "integer duration");
        if (out.duration < 0) lp.fail(value.col, "duration must be non-negative");
        have_duration = true;
      } else {
        bool known = false;
        for (const auto k : sim::override_keys())
          if (k == key) known = true;
        if (!known) lp.fail(tokens[0].col, "unknown key '" + key + "'");
        if (out.overrides.count(key)) lp.fail(tokens[0].col, "duplicate key '" + key + "'");
        out.overrides[key] = lp.parse_double(value, "numeric value");
      }
      last_header_line = line_no;
      continue;
    }

    const std::string_view head = tokens[0].text;
    if (head == "behavior") {
      if (phase == Phase::Events) lp.fail(tokens[0].col, "behavior line after events");
      phase = Phase::Network;
      if (tokens.size() != 3) lp.fail(tokens[0].col, "expected: behavior <name> <level>");
      sim::WalkAndKickExtras::ExtraBehavior extra;
      extra.name = lp.parse_ident(tokens[1], "behavior name");
      extra.requested = lp.parse_double(tokens[2], "activation level");
      if (!(extra.requested >= 0.0 && extra.requested <= 1.0))
        lp.fail(tokens[2].col, "activation level must lie in [0, 1]");
      out.behaviors.push_back(std::move(extra));
    } else if (head == "edge") {
      if (phase == Phase::Events) lp.fail(tokens[0].col, "edge line after events");
      phase = Phase::Network;
      if (tokens.size() != 4 && tokens.size() != 5)
        lp.fail(tokens[0].col, "expected: edge <source> -> <target> [chaining]");
      if (tokens[2].text != "->") lp.fail(tokens[2].col, "expected '->'");
      bc::InhibitionEdge edge;
      edge.source = lp.parse_ident(tokens[1], "behavior name");
      edge.target = lp.parse_ident(tokens[3], "behavior name");
      if (tokens.size() == 5) {
        if (tokens[4].text != "chaining") lp.fail(tokens[4].col, "expected 'chaining'");
        edge.chaining = true;
      }
      out.edges.push_back(std::move(edge));
    } else if (head == "at") {
      if (!have_duration)
        lp.fail(tokens[0].col, "duration must be declared before the first event");
      phase = Phase::Events;
      if (tokens.size() < 3) lp.fail(tokens[0].col, "expected: at <tick> <event> [args...]");
      sim::TimedEvent event;
      event.tick = lp.parse_int(tokens[1], "event tick");
      if (event.tick < 0) lp.fail(tokens[1].col, "event tick must be non-negative");
      if (event.tick >= out.duration)
        lp.fail(tokens[1].col, "event tick " + std::to_string(event.tick) +
                                   " is not below the duration (" + std::to_string(out.duration) + ")");
      if (!out.events.empty() && event.tick < out.events.back().tick)
        lp.fail(tokens[1].col, "events must be sorted by tick");

      const std::string_view kind = tokens[2].text;
      const auto want_args = [&](std::size_t n) {
        if (tokens.size() != 3 + n)
          lp.fail(tokens[2].col, "event '" + std::string(kind) + "' takes " + std::to_string(n) +
                                     " argument(s)");
      };
      if (kind == "press_button") {
        want_args(0);
        event.event = sim::PressButton{};
      } else if (kind == "set_ball") {
        want_args(2);
        event.event = sim::SetBall{lp.parse_double(tokens[3], "x coordinate"),
                                   lp.parse_double(tokens[4], "y coordinate")};
      } else if (kind == "hide_ball") {
        want_args(0);
        event.event = sim::HideBall{};
      } else if (kind == "place_obstacle") {
        want_args(2);
        event.event = sim::PlaceObstacle{lp.parse_double(tokens[3], "x coordinate"),
                                         lp.parse_double(tokens[4], "y coordinate")};
      } else if (kind == "move_robot") {
        want_args(3);
        event.event = sim::MoveRobot{lp.parse_double(tokens[3], "x coordinate"),
                                     lp.parse_double(tokens[4], "y coordinate"),
                                     lp.parse_double(tokens[5], "heading")};
      } else {
        lp.fail(tokens[2].col, "unknown event '" + std::string(kind) + "'");
      }
      out.events.push_back(std::move(event));
    } else {
      lp.fail(tokens[0].col, "malformed line; expected a header, behavior, edge or event line");
    }
  }

  LineParser eof(filename, last_header_line ? last_header_line : 1);
  if (!have_name) eof.fail(1, "missing required key 'name'");
  if (!have_example) eof.fail(1, "missing required key 'example'");
  if (!have_seed) eof.fail(1, "missing required key 'seed'");
  if (!have_duration) eof.fail(1, "missing required key 'duration'");
  return out;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path);
}

std::string serialize_scenario(const ScenarioFile& scenario) {
  std::ostringstream out;
  out << "name = " << scenario.name << "\n";
  out << "example = " << to_string(scenario.example) << "\n";
  out << "seed = " << scenario.seed << "\n";
  out << "duration = " << scenario.duration << "\n";
  for (const auto& [key, value] : scenario.overrides)
    out << key << " = " << format_number(value) << "\n";
  for (const auto& b : scenario.behaviors)
    out << "behavior " << b.name << " " << format_number(b.requested) << "\n";
  for (const auto& e : scenario.edges) {
    out << "edge " << e.source << " -> " << e.target;
    if (e.chaining) out << " chaining";
    out << "\n";
  }
  for (const auto& te : scenario.events) {
    out << "at " << te.tick << " ";
    std::visit(
        [&](const auto& ev) {
          using E = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<E, sim::PressButton>) {
            out << "press_button";
          } else if constexpr (std::is_same_v<E, sim::SetBall>) {
            out << "set_ball " << format_number(ev.x) << " " << format_number(ev.y);
          } else if constexpr (std::is_same_v<E, sim::HideBall>) {
            out << "hide_ball";
          } else if constexpr (std::is_same_v<E, sim::PlaceObstacle>) {
            out << "place_obstacle " << format_number(ev.x) << " " << format_number(ev.y);
          } else if constexpr (std::is_same_v<E, sim::MoveRobot>) {
            out << "move_robot " << format_number(ev.x) << " " << format_number(ev.y) << " "
                << format_number(ev.theta);
          }
        },
        te.event);
    out << "\n";
  }
  return out.str();
}

std::map<std::string, double> parse_defaults_file(std::string_view text, const std::string& filename) {
  std::map<std::string, double> out;
  std::istringstream stream{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const auto tokens = tokenize(raw_line);
    if (tokens.empty()) continue;
    LineParser lp(filename, line_no);
    if (!is_header_line(tokens)) lp.fail(tokens[0].col, "expected: <key> = <value>");
    const std::string key = lp.parse_ident(tokens[0], "constant name");
    bool known = false;
    for (const auto k : sim::override_keys())
      if (k == key) known = true;
    if (!known) lp.fail(tokens[0].col, "unknown constant '" + key + "'");
    if (out.count(key)) lp.fail(tokens[0].col, "duplicate constant '" + key + "'");
    out[key] = lp.parse_double(tokens[2], "numeric value");
  }
  return out;
}

} // namespace bkit::cli
