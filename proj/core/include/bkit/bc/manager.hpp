#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bkit/bc/layer.hpp"

namespace bkit::bc {

struct StepReport {
  std::uint64_t step = 0;
  std::vector<LayerStepReport> layers;
};

/// Links behavior layers together and drives them with a step routine.
///
/// Layers execute in registration order, generally highest abstraction
/// first. Within one step a later layer observes the commits earlier layers
/// made in the same step, while earlier layers observe the previous step's
/// commits. compile() must run once, after all registration and before the
/// first step.
class BehaviorManager {
public:
  BehaviorManager() = default;

  BehaviorManager(const BehaviorManager&) = delete;
  BehaviorManager& operator=(const BehaviorManager&) = delete;
  BehaviorManager(BehaviorManager&&) = default;
  BehaviorManager& operator=(BehaviorManager&&) = default;

  BehaviorLayer& add_layer(std::string name, bool interface_layer = false);

  BehaviorLayer& layer(const std::string& name);
  const BehaviorLayer& layer(const std::string& name) const;

  std::size_t layer_count() const noexcept { return layers_.size(); }
  const BehaviorLayer& layer_at(std::size_t i) const { return *layers_.at(i); }
  BehaviorLayer& layer_at(std::size_t i) { return *layers_.at(i); }

  bool compiled() const noexcept { return compiled_; }
  std::uint64_t step_count() const noexcept { return step_count_; }

  /// Freezes the structure: checks global actuator-name uniqueness, compiles
  /// every layer's inhibition network, resolves sensor bindings, and resets
  /// actuators to their defaults.
  void compile();

  /// Runs one step over all layers in order.
  StepReport step();

private:
  std::vector<std::unique_ptr<BehaviorLayer>> layers_;
  bool compiled_ = false;
  std::uint64_t step_count_ = 0;
};

} // namespace bkit::bc
