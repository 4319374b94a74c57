#pragma once

#include <string>
#include <vector>

#include "bkit/bc/manager.hpp"
#include "bkit/sim/goalie.hpp"
#include "bkit/sim/trace.hpp"
#include "bkit/sim/world.hpp"

namespace bkit::sim {

/// Scenario-file additions to the built-in network: inert extra behaviors
/// with a constant requested level, and extra inhibition edges (which may
/// reference built-in behaviors).
struct WalkAndKickExtras {
  struct ExtraBehavior {
    std::string name;
    double requested = 0.0;
  };
  std::vector<ExtraBehavior> behaviors;
  std::vector<bc::InhibitionEdge> edges;
};

/// The walk-and-kick network plus handles to its output actuators. The
/// manager is built uncompiled so callers can inspect or compile it
/// themselves (graph export, validation).
struct WalkAndKickRig {
  bc::BehaviorManager manager;
  bc::Channel<Pose2D>* gait = nullptr;
  bc::Channel<bool>* kick = nullptr;
  bc::Channel<double>* head = nullptr;
};

/// Builds the single-layer network: KickBall, GoBehindBall, SearchForBall and
/// HeadControl with chaining inhibitions KickBall -> GoBehindBall ->
/// SearchForBall and a non-chaining SearchForBall -> HeadControl. KickBall
/// runs a nested state controller for its windup/strike/follow-through
/// phases. world may be null for structure-only uses; trace may be null.
WalkAndKickRig build_walk_and_kick(const WorldState* world, const Defaults* cfg,
                                   const WalkAndKickExtras& extras = {},
                                   TraceRecorder* trace = nullptr);

/// Runs the scripted walk-and-kick scenario.
RunResult run_walk_and_kick(const ScenarioScript& script, const Defaults& cfg, std::int64_t seed,
                            const WalkAndKickExtras& extras = {});

} // namespace bkit::sim
