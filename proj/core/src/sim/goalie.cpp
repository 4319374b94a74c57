#include "bkit/sim/goalie.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bkit/sc/state_controller.hpp"

namespace bkit::sim {

namespace {

struct GoalieContext {
  const WorldState* world = nullptr;
  Commands* cmd = nullptr;
  const Defaults* cfg = nullptr;
  TraceRecorder* trace = nullptr;
};

std::string pose_detail(const Pose2D& p) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "x=%.3f y=%.3f theta=%.3f", p.x, p.y, p.theta);
  return buf;
}

class WaitForButton final : public sc::State {
public:
  explicit WaitForButton(GoalieContext* ctx) : State("WaitForButton"), ctx_(ctx) {}

  void execute(sc::StateController&) override {
    if (ctx_->world->button_pressed) {
      ctx_->cmd->consume_button = true;
      set_complete();
    }
  }

private:
  GoalieContext* ctx_;
};

class MonitorBall final : public sc::State {
public:
  explicit MonitorBall(GoalieContext* ctx) : State("MonitorBall"), ctx_(ctx) {}
  void execute(sc::StateController& ctrl) override;

private:
  GoalieContext* ctx_;
};

class Dive final : public sc::State {
public:
  explicit Dive(GoalieContext* ctx) : State("Dive"), ctx_(ctx) {}

  // Terminal for the episode: commands the dive every cycle, never completes.
  void execute(sc::StateController&) override { ctx_->cmd->dive = true; }

private:
  GoalieContext* ctx_;
};

class WalkToPose final : public sc::State {
public:
  WalkToPose(GoalieContext* ctx, Pose2D target, bool allow_detour = true)
      : State("WalkToPose"), ctx_(ctx), target_(target), allow_detour_(allow_detour) {}

  std::string detail() const override { return pose_detail(target_); }

  void execute(sc::StateController& ctrl) override {
    const WorldState& world = *ctx_->world;
    const Defaults& cfg = *ctx_->cfg;

    // A press while walking out means: scrap the queued plan, walk on, then
    // wait for the button again.
    if (world.button_pressed) {
      const std::size_t removed = ctrl.clear_queue();
      ctx_->trace->emit("queue_edited", {{"op", "clear"}, {"removed", removed}});
      ctrl.enqueue(sc::make_state<WaitForButton>(ctx_));
      ctx_->trace->emit("queue_edited", {{"op", "push_back"}, {"state", "WaitForButton"}});
      ctx_->cmd->consume_button = true;
    }

    if (allow_detour_) {
      for (const Vec2& obstacle : world.obstacles) {
        if (point_segment_distance(obstacle, world.robot.position(), target_.position()) >=
            cfg.obstacle_clearance)
          continue;
        // Waypoint sideways of the blocked line; the inserted walks are
        // trusted and do not re-plan around the same obstacle.
        Vec2 dir = target_.position() - world.robot.position();
        const double len = dir.norm();
        if (len <= cfg.arrive_dist_tol) continue;
        dir = dir * (1.0 / len);
        const Vec2 left{-dir.y, dir.x};
        const Vec2 waypoint = obstacle + left * cfg.obstacle_detour_offset;
        ctrl.enqueue_front(sc::make_state<WalkToPose>(ctx_, target_, false));
        ctx_->trace->emit("queue_edited",
                          {{"op", "push_front"}, {"state", "WalkToPose"}, {"detail", pose_detail(target_)}});
        const Pose2D via{waypoint.x, waypoint.y, target_.theta};
        ctrl.enqueue_front(sc::make_state<WalkToPose>(ctx_, via, false));
        ctx_->trace->emit("queue_edited",
                          {{"op", "push_front"}, {"state", "WalkToPose"}, {"detail", pose_detail(via)}});
        set_complete();
        return;
      }
    }

    const double dist = distance(world.robot.position(), target_.position());
    const double dtheta = std::abs(wrap_angle(target_.theta - world.robot.theta));
    if (dist <= cfg.arrive_dist_tol && dtheta <= cfg.arrive_angle_tol) {
      set_complete();
      return;
    }
    ctx_->cmd->walk_to = target_;
  }

private:
  GoalieContext* ctx_;
  Pose2D target_;
  bool allow_detour_;
};

void MonitorBall::execute(sc::StateController& ctrl) {
  const WorldState& world = *ctx_->world;
  const Defaults& cfg = *ctx_->cfg;
  if (!world.ball) return;

  if (distance(*world.ball, world.robot.position()) < cfg.dive_trigger_dist) {
    const std::size_t removed = ctrl.clear_queue();
    ctx_->trace->emit("queue_edited", {{"op", "clear"}, {"removed", removed}});
    ctrl.enqueue(sc::make_state<Dive>(ctx_));
    ctx_->trace->emit("queue_edited", {{"op", "push_back"}, {"state", "Dive"}});
    set_complete();
    return;
  }

  const double target_y = std::clamp(world.ball->y, -cfg.goal_half_width, cfg.goal_half_width);
  if (std::abs(target_y - world.robot.y) > cfg.reposition_threshold) {
    const Pose2D target{cfg.goalie_home.x, target_y, cfg.goalie_home.theta};
    ctrl.enqueue(sc::make_state<WalkToPose>(ctx_, target));
    ctx_->trace->emit("queue_edited",
                      {{"op", "push_back"}, {"state", "WalkToPose"}, {"detail", pose_detail(target)}});
    ctrl.enqueue(sc::make_state<MonitorBall>(ctx_));
    ctx_->trace->emit("queue_edited", {{"op", "push_back"}, {"state", "MonitorBall"}});
    set_complete();
  }
}

} // namespace

RunResult run_goalie(const ScenarioScript& script, const Defaults& cfg, std::int64_t seed) {
  WorldState world;
  world.robot = cfg.goalie_start;
  world.seed = seed;

  TraceRecorder recorder;
  Commands cmd;
  GoalieContext ctx{&world, &cmd, &cfg, &recorder};

  sc::StateController ctrl;
  ctrl.callbacks().on_activate = [&](sc::State& s) {
    nlohmann::json payload{{"state", s.kind()}};
    if (auto detail = s.detail(); !detail.empty()) payload["detail"] = detail;
    recorder.emit("state_activated", std::move(payload));
  };
  ctrl.callbacks().on_deactivate = [&](sc::State& s) {
    recorder.emit("state_deactivated", {{"state", s.kind()}});
  };

  ctrl.enqueue(sc::make_state<WaitForButton>(&ctx));
  ctrl.enqueue(sc::make_state<WalkToPose>(&ctx, cfg.goalie_home));
  ctrl.enqueue(sc::make_state<MonitorBall>(&ctx));

  std::size_t next_event = 0;
  for (std::int64_t t = 0; t < script.duration; ++t) {
    recorder.set_tick(t);
    while (next_event < script.events.size() && script.events[next_event].tick <= t) {
      world = apply_event(std::move(world), script.events[next_event].event);
      ++next_event;
    }
    recorder.emit("world", world_json(world));
    cmd = Commands{};
    ctrl.step();
    world = world_step(std::move(world), cmd, cfg);
  }

  return RunResult{recorder.take(), std::move(world)};
}

} // namespace bkit::sim
