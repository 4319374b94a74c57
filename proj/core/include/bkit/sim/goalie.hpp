#pragma once

#include "bkit/sim/trace.hpp"
#include "bkit/sim/world.hpp"

namespace bkit::sim {

struct RunResult {
  Trace trace;
  WorldState final_world;
};

/// Runs the goalie demo: a state controller initialized with the queue
/// [WaitForButton, WalkToPose(home), MonitorBall].
///
/// MonitorBall enqueues a further WalkToPose plus a fresh MonitorBall when
/// repositioning is warranted, and replaces the whole queue with Dive when
/// the ball threatens the goal (Dive is terminal for the episode). A button
/// press during a walk clears the queued plan and substitutes a new
/// WaitForButton; an obstacle near the walk path prepends detour WalkToPose
/// instances without forgetting the rest of the plan.
RunResult run_goalie(const ScenarioScript& script, const Defaults& cfg, std::int64_t seed);

} // namespace bkit::sim
