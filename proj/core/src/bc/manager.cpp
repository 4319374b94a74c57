#include "bkit/bc/manager.hpp"

#include <map>

namespace bkit::bc {

BehaviorLayer& BehaviorManager::add_layer(std::string name, bool interface_layer) {
  if (compiled_)
    throw Error(Errc::RecompileError, "add_layer: registration is closed after compile");
  for (const auto& layer : layers_)
    if (layer->name() == name) throw Error(Errc::DuplicateName, "layer '" + name + "' already exists");
  layers_.push_back(
      std::unique_ptr<BehaviorLayer>(new BehaviorLayer(std::move(name), interface_layer)));
  return *layers_.back();
}

BehaviorLayer& BehaviorManager::layer(const std::string& name) {
  for (auto& layer : layers_)
    if (layer->name() == name) return *layer;
  throw Error(Errc::UnknownBehavior, "no layer named '" + name + "'");
}

const BehaviorLayer& BehaviorManager::layer(const std::string& name) const {
  for (const auto& layer : layers_)
    if (layer->name() == name) return *layer;
  throw Error(Errc::UnknownBehavior, "no layer named '" + name + "'");
}

void BehaviorManager::compile() {
  if (compiled_) throw Error(Errc::RecompileError, "behavior manager compiled twice");

  std::map<std::string, ChannelBase*> registry;
  for (auto& layer : layers_)
    for (auto& ch : layer->channels_) {
      if (!registry.emplace(ch->name(), ch.get()).second)
        throw Error(Errc::DuplicateName, "actuator '" + ch->name() + "' registered more than once");
    }

  for (auto& layer : layers_) layer->compile();
  for (auto& layer : layers_) layer->bind_sensors(registry);
  compiled_ = true;
}

StepReport BehaviorManager::step() {
  if (!compiled_) throw Error(Errc::NotCompiled, "step before compile");
  StepReport report;
  report.step = step_count_;
  report.layers.reserve(layers_.size());
  for (auto& layer : layers_) report.layers.push_back(layer->run_step());
  ++step_count_;
  return report;
}

} // namespace bkit::bc
