#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bkit/bc/behavior.hpp"
#include "bkit/bc/channel.hpp"
#include "bkit/bc/inhibition_graph.hpp"

namespace bkit::bc {

class BehaviorManager;

/// Per-layer slice of a StepReport.
struct LayerStepReport {
  std::string layer;
  /// (behavior name, record) in registration order.
  std::vector<std::pair<std::string, ActivationRecord>> activations;
  struct Commit {
    std::string name;
    nlohmann::json value;
    bool updated = false;
  };
  /// Owned channels after this layer's commit point, in registration order.
  std::vector<Commit> commits;
};

/// A group of behaviors at one abstraction level plus the actuators it owns
/// and the sensors it reads. Layers are created through a BehaviorManager and
/// all registration happens before compile(); afterwards the structure is
/// frozen. Interface layers additionally run external-exchange hooks at the
/// edges of their step slice (read before latching, write after committing),
/// which is the seam for plugging in real I/O.
class BehaviorLayer {
public:
  BehaviorLayer(const BehaviorLayer&) = delete;
  BehaviorLayer& operator=(const BehaviorLayer&) = delete;

  const std::string& name() const noexcept { return name_; }
  bool is_interface() const noexcept { return interface_; }
  bool compiled() const noexcept { return compiled_; }

  Behavior& add_behavior(std::unique_ptr<Behavior> behavior);

  /// Convenience for callable-defined behaviors.
  Behavior& add_behavior(std::string name, std::function<double()> activation,
                         std::function<void(Behavior&)> execute = {});

  /// Declares that source inhibits target within this layer. Both names must
  /// exist by compile time.
  void add_inhibition(std::string source, std::string target, bool chaining = false);

  template <typename T>
  Channel<T>& add_actuator(std::string name, T default_value, bool aggregatable = false) {
    require_open("add_actuator");
    for (const auto& ch : channels_)
      if (ch->name() == name)
        throw Error(Errc::DuplicateName, "actuator '" + name + "' already exists in layer '" + name_ + "'");
    auto channel = std::make_unique<Channel<T>>(std::move(name), std::move(default_value), aggregatable);
    auto& ref = *channel;
    channels_.push_back(std::move(channel));
    return ref;
  }

  /// Requests the committed value of an actuator (possibly in another layer)
  /// under a layer-local sensor name. Resolution happens at compile.
  template <typename T>
  Sensor<T>& bind_sensor(std::string sensor_name, std::string actuator_name) {
    require_open("bind_sensor");
    for (const auto& s : sensors_)
      if (s->name() == sensor_name)
        throw Error(Errc::RebindError, "sensor '" + sensor_name + "' already bound in layer '" + name_ + "'");
    auto sensor = std::make_unique<Sensor<T>>(std::move(sensor_name), std::move(actuator_name));
    auto& ref = *sensor;
    sensors_.push_back(std::move(sensor));
    return ref;
  }

  /// External-exchange hooks; only legal on interface layers. The hooks must
  /// not reenter the manager.
  void set_external_hooks(std::function<void()> read_external, std::function<void()> write_external);

  std::size_t behavior_count() const noexcept { return behaviors_.size(); }
  const Behavior& behavior_at(std::size_t i) const { return *behaviors_.at(i); }
  Behavior& behavior_at(std::size_t i) { return *behaviors_.at(i); }
  const Behavior* find_behavior(const std::string& name) const;

  /// Explicit inhibitions as registered (exact duplicates collapse).
  const std::vector<InhibitionEdge>& inhibitions() const noexcept { return edges_; }

  /// Compiled network; only valid after the manager compiled.
  const InhibitionGraph& graph() const;

  /// Applies the compiled inhibition network to externally supplied requested
  /// levels. The map must cover exactly the layer's behaviors.
  std::map<std::string, ActivationRecord> resolve_activations(
      const std::map<std::string, double>& requested) const;

private:
  friend class BehaviorManager;

  BehaviorLayer(std::string name, bool interface_layer)
      : name_(std::move(name)), interface_(interface_layer) {}

  void require_open(const char* op) const;
  void compile();
  void bind_sensors(const std::map<std::string, ChannelBase*>& registry);
  LayerStepReport run_step();

  std::vector<std::string> behavior_names() const;

  std::string name_;
  bool interface_ = false;
  bool compiled_ = false;

  std::vector<std::unique_ptr<Behavior>> behaviors_;
  std::vector<InhibitionEdge> edges_;
  std::vector<std::unique_ptr<ChannelBase>> channels_;
  std::vector<std::unique_ptr<SensorBase>> sensors_;
  std::function<void()> read_external_;
  std::function<void()> write_external_;

  InhibitionGraph graph_;
};

} // namespace bkit::bc
