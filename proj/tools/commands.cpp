#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "bkit/bc/export_graph.hpp"
#include "bkit/error.hpp"
#include "bkit/sim/goalie.hpp"
#include "bkit/sim/walk_and_kick.hpp"
#include "scenario_file.hpp"
#include "trace_file.hpp"

namespace bkit::cli {

namespace {

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(std::string("cannot open ") + what + " '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

sim::Defaults build_defaults(const ScenarioFile& scenario) {
  sim::Defaults defaults;
  if (const char* env_path = std::getenv("BEHAVIOR_KIT_DEFAULTS"); env_path && *env_path) {
    const auto overrides = parse_defaults_file(read_file(env_path, "defaults file"), env_path);
    for (const auto& [key, value] : overrides) sim::apply_override(defaults, key, value);
  }
  for (const auto& [key, value] : scenario.overrides) sim::apply_override(defaults, key, value);
  return defaults;
}

sim::WalkAndKickExtras extras_of(const ScenarioFile& scenario) {
  sim::WalkAndKickExtras extras;
  extras.behaviors = scenario.behaviors;
  extras.edges = scenario.edges;
  return extras;
}

void check_extras_allowed(const ScenarioFile& scenario) {
  if (scenario.example == ExampleKind::Goalie &&
      (!scenario.behaviors.empty() || !scenario.edges.empty()))
    throw Error(Errc::NotABehaviorScenario,
                "scenario '" + scenario.name + "': behavior/edge definitions require a walk_and_kick scenario");
}

// Truncating the run with --steps drops the events past the new horizon.
sim::ScenarioScript make_script(const ScenarioFile& scenario, std::int64_t duration) {
  sim::ScenarioScript script;
  script.duration = duration;
  for (const auto& event : scenario.events)
    if (event.tick < duration) script.events.push_back(event);
  return script;
}

int report_failure(std::ostream& err, const std::exception& e, int code) {
  if (code == kExitParse)
    err << e.what() << "\n";
  else
    err << "error: " << e.what() << "\n";
  return code;
}

template <typename Fn>
int guarded_command(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return report_failure(err, e, kExitParse);
  } catch (const Error& e) {
    return report_failure(err, e, kExitRuntime);
  } catch (const std::exception& e) {
    return report_failure(err, e, kExitRuntime);
  }
}

} // namespace

int cmd_run(const std::string& scenario_path, const RunFlags& flags, std::ostream& out,
            std::ostream& err) {
  return guarded_command(err, [&] {
    const ScenarioFile scenario = load_scenario(scenario_path);
    check_extras_allowed(scenario);
    const sim::Defaults defaults = build_defaults(scenario);
    const std::int64_t seed = flags.seed.value_or(scenario.seed);
    const std::int64_t duration = flags.steps.value_or(scenario.duration);
    const sim::ScenarioScript script = make_script(scenario, duration);

    sim::RunResult result;
    if (scenario.example == ExampleKind::Goalie)
      result = sim::run_goalie(script, defaults, seed);
    else
      result = sim::run_walk_and_kick(script, defaults, seed, extras_of(scenario));

    if (flags.trace_path) {
      std::ofstream trace_out(*flags.trace_path, std::ios::binary);
      if (!trace_out) throw std::runtime_error("cannot write trace file '" + *flags.trace_path + "'");
      write_trace(trace_out, scenario.name, seed, result.trace);
    } else {
      write_trace(out, scenario.name, seed, result.trace);
    }

    if (!flags.quiet)
      err << "ran '" << scenario.name << "': " << duration << " ticks, " << result.trace.size()
          << " trace events\n";
    return kExitOk;
  });
}

int cmd_graph(const std::string& scenario_path, const std::optional<std::string>& dot_path,
              std::ostream& out, std::ostream& err) {
  return guarded_command(err, [&] {
    const ScenarioFile scenario = load_scenario(scenario_path);
    if (scenario.example != ExampleKind::WalkAndKick)
      throw Error(Errc::NotABehaviorScenario,
                  "scenario '" + scenario.name + "' does not define a behavior network");
    const sim::Defaults defaults = build_defaults(scenario);
    sim::WalkAndKickRig rig = sim::build_walk_and_kick(nullptr, &defaults, extras_of(scenario));
    rig.manager.compile();
    const std::string dot = bc::export_graph_dot(rig.manager);

    if (dot_path) {
      std::ofstream dot_out(*dot_path, std::ios::binary);
      if (!dot_out) throw std::runtime_error("cannot write DOT file '" + *dot_path + "'");
      dot_out << dot;
    } else {
      out << dot;
    }
    return kExitOk;
  });
}

int cmd_validate(const std::string& scenario_path, std::ostream&, std::ostream& err) {
  return guarded_command(err, [&] {
    const ScenarioFile scenario = load_scenario(scenario_path);
    check_extras_allowed(scenario);
    const sim::Defaults defaults = build_defaults(scenario);
    if (scenario.example == ExampleKind::WalkAndKick) {
      sim::WalkAndKickRig rig = sim::build_walk_and_kick(nullptr, &defaults, extras_of(scenario));
      rig.manager.compile();
    }
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"behavior-kit: scripted behavior-control scenarios"};
  app.require_subcommand(1);

  std::string scenario_path;
  RunFlags flags;
  std::int64_t steps = 0;
  std::int64_t seed = 0;
  std::string trace_path;
  std::string dot_path;

  CLI::App* run = app.add_subcommand("run", "Run a scenario and emit a JSON-lines trace");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  CLI::Option* steps_opt =
      run->add_option("--steps", steps, "Override the scenario duration")->check(CLI::NonNegativeNumber);
  CLI::Option* seed_opt = run->add_option("--seed", seed, "Override the scenario seed");
  CLI::Option* trace_opt =
      run->add_option("--trace", trace_path, "Trace output path (default: standard output)");
  run->add_flag("--quiet", flags.quiet, "Suppress the run summary");

  CLI::App* graph = app.add_subcommand("graph", "Export the compiled inhibition network as DOT");
  graph->add_option("scenario", scenario_path, "Scenario file")->required();
  CLI::Option* dot_opt =
      graph->add_option("--dot", dot_path, "DOT output path (default: standard output)");

  CLI::App* validate = app.add_subcommand("validate", "Parse and compile a scenario without running");
  validate->add_option("scenario", scenario_path, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (run->parsed()) {
    if (*steps_opt) flags.steps = steps;
    if (*seed_opt) flags.seed = seed;
    if (*trace_opt) flags.trace_path = trace_path;
    return cmd_run(scenario_path, flags, out, err);
  }
  if (graph->parsed()) {
    std::optional<std::string> dot;
    if (*dot_opt) dot = dot_path;
    return cmd_graph(scenario_path, dot, out, err);
  }
  return cmd_validate(scenario_path, out, err);
}

} // namespace bkit::cli
