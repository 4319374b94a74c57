#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace bkit::sim {

struct PressButton {
  friend bool operator==(const PressButton&, const PressButton&) = default;
};
struct SetBall {
  double x = 0.0, y = 0.0;
  friend bool operator==(const SetBall&, const SetBall&) = default;
};
struct HideBall {
  friend bool operator==(const HideBall&, const HideBall&) = default;
};
struct PlaceObstacle {
  double x = 0.0, y = 0.0;
  friend bool operator==(const PlaceObstacle&, const PlaceObstacle&) = default;
};
struct MoveRobot {
  double x = 0.0, y = 0.0, theta = 0.0;
  friend bool operator==(const MoveRobot&, const MoveRobot&) = default;
};

using Event = std::variant<PressButton, SetBall, HideBall, PlaceObstacle, MoveRobot>;

struct TimedEvent {
  std::int64_t tick = 0;
  Event event;
  friend bool operator==(const TimedEvent&, const TimedEvent&) = default;
};

/// Scripted world perturbations for one run. Events are sorted by tick and
/// every tick lies in [0, duration); the scenario parser enforces both.
struct ScenarioScript {
  std::int64_t duration = 0;
  std::vector<TimedEvent> events;
  friend bool operator==(const ScenarioScript&, const ScenarioScript&) = default;
};

} // namespace bkit::sim
