#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "bkit/geometry.hpp"
#include "bkit/sim/defaults.hpp"
#include "bkit/sim/script.hpp"

namespace bkit::sim {

/// Complete state of the toy 2D soccer world. Evolution is a pure function
/// of (state, commands, scripted events); the seed is carried along for
/// reproducibility bookkeeping, the dynamics themselves are noise-free.
struct WorldState {
  Pose2D robot;
  std::optional<Vec2> ball;  // absent = not visible
  bool button_pressed = false;
  std::vector<Vec2> obstacles;
  std::int64_t tick = 0;
  std::int64_t seed = 0;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

/// What the control side asks of the world for one tick.
struct Commands {
  std::optional<Pose2D> walk_to;
  bool kick = false;
  bool dive = false;
  bool consume_button = false;
};

/// Applies one scripted event; the tick counter is untouched.
WorldState apply_event(WorldState world, const Event& event);

/// Advances the world by one tick: the robot moves at most v_max*dt toward
/// the commanded pose (and turns at most omega_max*dt), a kick launches the
/// ball kick_distance along the robot's heading when it is at the foot, the
/// ball is otherwise static. A diving robot does not move.
WorldState world_step(WorldState world, const Commands& commands, const Defaults& cfg);

/// Whether the ball is directly in front of a foot: visible, within
/// at_foot_dist, and within at_foot_angle of the robot's heading.
bool ball_at_foot(const WorldState& world, const Defaults& cfg);

nlohmann::json world_json(const WorldState& world);

} // namespace bkit::sim
