#include "bkit/sim/walk_and_kick.hpp"

#include <cmath>
#include <memory>

#include "bkit/sc/state_controller.hpp"

namespace bkit::sim {

namespace {

class KickBall;

// One phase of the kick motion; completes after a fixed number of cycles.
// The strike phase pulls the trigger actuator through the owning behavior.
class KickPhase final : public sc::State {
public:
  KickPhase(std::string kind, int duration_ticks, KickBall* owner, bool strike)
      : State(std::move(kind)), remaining_(duration_ticks), owner_(owner), strike_(strike) {}

  void execute(sc::StateController&) override;

private:
  int remaining_;
  KickBall* owner_;
  bool strike_;
};

// Requests 1.0 iff the ball sits directly in front of a foot, or a kick is
// already in motion. The kick phases live in a nested state controller that
// is repopulated with fresh instances for every kick.
class KickBall final : public bc::Behavior {
public:
  KickBall(const WorldState* world, const Defaults* cfg, bc::Channel<bool>* trigger,
           TraceRecorder* trace)
      : Behavior("KickBall"), world_(world), cfg_(cfg), trigger_(trigger) {
    if (trace) {
      fsm_.callbacks().on_activate = [trace](sc::State& s) {
        trace->emit("state_activated", {{"state", s.kind()}, {"controller", "KickBall"}});
      };
      fsm_.callbacks().on_deactivate = [trace](sc::State& s) {
        trace->emit("state_deactivated", {{"state", s.kind()}, {"controller", "KickBall"}});
      };
    }
  }

  double compute_activation() override {
    if (armed_) return 1.0;
    return (world_ && ball_at_foot(*world_, *cfg_)) ? 1.0 : 0.0;
  }

  void execute() override {
    if (!armed_) {
      fsm_.enqueue(sc::make_state<KickPhase>("KickWindup", cfg_->windup_ticks, this, false));
      fsm_.enqueue(sc::make_state<KickPhase>("KickStrike", cfg_->strike_ticks, this, true));
      fsm_.enqueue(sc::make_state<KickPhase>("KickFollowThrough", cfg_->follow_ticks, this, false));
      armed_ = true;
    }
    if (fsm_.step() == sc::Status::Halted) armed_ = false;
  }

  void write_trigger() { write(*trigger_, true); }

private:
  const WorldState* world_;
  const Defaults* cfg_;
  bc::Channel<bool>* trigger_;
  sc::StateController fsm_;
  bool armed_ = false;
};

void KickPhase::execute(sc::StateController&) {
  if (strike_) owner_->write_trigger();
  if (--remaining_ <= 0) set_complete();
}

// Requests 1.0 whenever the ball can be seen; walks to a pose just behind it.
class GoBehindBall final : public bc::Behavior {
public:
  GoBehindBall(const WorldState* world, const Defaults* cfg, bc::Channel<Pose2D>* gait)
      : Behavior("GoBehindBall"), world_(world), cfg_(cfg), gait_(gait) {}

  double compute_activation() override { return (world_ && world_->ball) ? 1.0 : 0.0; }

  void execute() override {
    const Vec2 ball = *world_->ball;
    write(*gait_, Pose2D{ball.x - cfg_->approach_offset, ball.y, 0.0});
  }

private:
  const WorldState* world_;
  const Defaults* cfg_;
  bc::Channel<Pose2D>* gait_;
};

// Always requests 1.0; sweeps the head in a deterministic triangle wave.
class SearchForBall final : public bc::Behavior {
public:
  SearchForBall(const WorldState* world, const Defaults* cfg, bc::Channel<double>* head)
      : Behavior("SearchForBall"), world_(world), cfg_(cfg), head_(head) {}

  double compute_activation() override { return 1.0; }

  void execute() override {
    const double period = std::max(2.0, cfg_->head_scan_period);
    const double phase = static_cast<double>(world_->tick % static_cast<std::int64_t>(period)) / period;
    const double wave = phase < 0.5 ? 4.0 * phase - 1.0 : 3.0 - 4.0 * phase;
    write(*head_, cfg_->head_scan_amplitude * wave);
  }

private:
  const WorldState* world_;
  const Defaults* cfg_;
  bc::Channel<double>* head_;
};

// Tracks the ball with the head whenever it gets to run, i.e. whenever
// SearchForBall is itself inhibited.
class HeadControl final : public bc::Behavior {
public:
  HeadControl(const WorldState* world, const Defaults* cfg, bc::Channel<double>* head)
      : Behavior("HeadControl"), world_(world), cfg_(cfg), head_(head) {}

  double compute_activation() override { return 1.0; }

  void execute() override {
    double yaw = 0.0;
    if (world_->ball) {
      const Vec2 delta = *world_->ball - world_->robot.position();
      yaw = std::clamp(wrap_angle(std::atan2(delta.y, delta.x) - world_->robot.theta),
                       -cfg_->head_scan_amplitude, cfg_->head_scan_amplitude);
    }
    write(*head_, yaw);
  }

private:
  const WorldState* world_;
  const Defaults* cfg_;
  bc::Channel<double>* head_;
};

} // namespace

WalkAndKickRig build_walk_and_kick(const WorldState* world, const Defaults* cfg,
                                   const WalkAndKickExtras& extras, TraceRecorder* trace) {
  WalkAndKickRig rig;
  bc::BehaviorLayer& layer = rig.manager.add_layer("soccer");

  rig.gait = &layer.add_actuator<Pose2D>("GaitTarget", Pose2D{});
  rig.kick = &layer.add_actuator<bool>("KickTrigger", false);
  rig.head = &layer.add_actuator<double>("HeadYaw", 0.0);

  layer.add_behavior(std::make_unique<KickBall>(world, cfg, rig.kick, trace));
  layer.add_behavior(std::make_unique<GoBehindBall>(world, cfg, rig.gait));
  layer.add_behavior(std::make_unique<SearchForBall>(world, cfg, rig.head));
  layer.add_behavior(std::make_unique<HeadControl>(world, cfg, rig.head));

  layer.add_inhibition("KickBall", "GoBehindBall", true);
  layer.add_inhibition("GoBehindBall", "SearchForBall", true);
  layer.add_inhibition("SearchForBall", "HeadControl", false);

  for (const auto& extra : extras.behaviors) {
    const double level = extra.requested;
    layer.add_behavior(extra.name, [level] { return level; });
  }
  for (const auto& edge : extras.edges) layer.add_inhibition(edge.source, edge.target, edge.chaining);

  return rig;
}

RunResult run_walk_and_kick(const ScenarioScript& script, const Defaults& cfg, std::int64_t seed,
                            const WalkAndKickExtras& extras) {
  WorldState world;
  world.robot = cfg.striker_start;
  world.seed = seed;

  TraceRecorder recorder;
  WalkAndKickRig rig = build_walk_and_kick(&world, &cfg, extras, &recorder);
  rig.manager.compile();

  std::size_t next_event = 0;
  for (std::int64_t t = 0; t < script.duration; ++t) {
    recorder.set_tick(t);
    while (next_event < script.events.size() && script.events[next_event].tick <= t) {
      world = apply_event(std::move(world), script.events[next_event].event);
      ++next_event;
    }
    recorder.emit("world", world_json(world));

    const bc::StepReport report = rig.manager.step();

    Commands cmd;
    for (const auto& layer_report : report.layers) {
      for (const auto& [name, record] : layer_report.activations) {
        recorder.emit("behavior_activation", {{"behavior", name},
                                              {"requested", record.requested},
                                              {"true_level", record.true_level}});
      }
      for (const auto& commit : layer_report.commits) {
        if (!commit.updated) continue;
        recorder.emit("actuator_commit", {{"actuator", commit.name}, {"value", commit.value}});
        if (commit.name == "GaitTarget") cmd.walk_to = rig.gait->committed();
        if (commit.name == "KickTrigger") cmd.kick = rig.kick->committed();
      }
    }
    world = world_step(std::move(world), cmd, cfg);
  }

  return RunResult{recorder.take(), std::move(world)};
}

} // namespace bkit::sim
