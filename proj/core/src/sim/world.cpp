#include "bkit/sim/world.hpp"

#include <cmath>

namespace bkit::sim {

WorldState apply_event(WorldState world, const Event& event) {
  std::visit(
      [&](const auto& e) {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, PressButton>) {
          world.button_pressed = true;
        } else if constexpr (std::is_same_v<E, SetBall>) {
          world.ball = Vec2{e.x, e.y};
        } else if constexpr (std::is_same_v<E, HideBall>) {
          world.ball.reset();
        } else if constexpr (std::is_same_v<E, PlaceObstacle>) {
          world.obstacles.push_back(Vec2{e.x, e.y});
        } else if constexpr (std::is_same_v<E, MoveRobot>) {
          world.robot = Pose2D{e.x, e.y, e.theta};
        }
      },
      event);
  return world;
}

WorldState world_step(WorldState world, const Commands& commands, const Defaults& cfg) {
  if (commands.consume_button) world.button_pressed = false;

  if (commands.walk_to && !commands.dive) {
    const Pose2D& target = *commands.walk_to;
    const double step_len = cfg.v_max * cfg.dt;
    const Vec2 delta = target.position() - world.robot.position();
    const double dist = delta.norm();
    if (dist <= step_len) {
      world.robot.x = target.x;
      world.robot.y = target.y;
    } else {
      world.robot.x += delta.x / dist * step_len;
      world.robot.y += delta.y / dist * step_len;
    }
    const double max_turn = cfg.omega_max * cfg.dt;
    const double dtheta = wrap_angle(target.theta - world.robot.theta);
    world.robot.theta = wrap_angle(world.robot.theta + std::clamp(dtheta, -max_turn, max_turn));
  }

  if (commands.kick && ball_at_foot(world, cfg)) {
    *world.ball = *world.ball + Vec2{std::cos(world.robot.theta), std::sin(world.robot.theta)} * cfg.kick_distance;
  }

  ++world.tick;
  return world;
}

bool ball_at_foot(const WorldState& world, const Defaults& cfg) {
  if (!world.ball) return false;
  const Vec2 delta = *world.ball - world.robot.position();
  if (delta.norm() > cfg.at_foot_dist) return false;
  const double bearing = wrap_angle(std::atan2(delta.y, delta.x) - world.robot.theta);
  return std::abs(bearing) <= cfg.at_foot_angle;
}

nlohmann::json world_json(const WorldState& world) {
  nlohmann::json j{
      {"robot", world.robot},
      {"button", world.button_pressed},
      {"tick", world.tick},
  };
  if (world.ball)
    j["ball"] = *world.ball;
  else
    j["ball"] = nullptr;
  j["obstacles"] = world.obstacles;
  return j;
}

} // namespace bkit::sim
