#include "bkit/bc/layer.hpp"

#include <algorithm>

namespace bkit::bc {

namespace {

// Runs a user hook, rewrapping anything thrown with layer/behavior context so
// the caller can tell where a step aborted.
template <typename F>
void guarded(const std::string& context, F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    throw Error(e.code(), context + ": " + e.message());
  } catch (const std::exception& e) {
    throw Error(Errc::HookFailure, context + ": " + e.what());
  }
}

} // namespace

Behavior& BehaviorLayer::add_behavior(std::unique_ptr<Behavior> behavior) {
  require_open("add_behavior");
  if (!behavior) throw Error(Errc::UnknownBehavior, "null behavior");
  if (find_behavior(behavior->name()))
    throw Error(Errc::DuplicateName,
                "behavior '" + behavior->name() + "' already exists in layer '" + name_ + "'");
  behavior->registration_index_ = behaviors_.size();
  behaviors_.push_back(std::move(behavior));
  return *behaviors_.back();
}

Behavior& BehaviorLayer::add_behavior(std::string name, std::function<double()> activation,
                                      std::function<void(Behavior&)> execute) {
  return add_behavior(
      std::make_unique<LambdaBehavior>(std::move(name), std::move(activation), std::move(execute)));
}

void BehaviorLayer::add_inhibition(std::string source, std::string target, bool chaining) {
  require_open("add_inhibition");
  if (source == target)
    throw Error(Errc::CycleError, "inhibition cycle: " + source + " -> " + target);
  InhibitionEdge edge{std::move(source), std::move(target), chaining};
  if (std::find(edges_.begin(), edges_.end(), edge) == edges_.end()) edges_.push_back(std::move(edge));
}

void BehaviorLayer::set_external_hooks(std::function<void()> read_external,
                                       std::function<void()> write_external) {
  if (!interface_)
    throw Error(Errc::HookFailure, "layer '" + name_ + "' is not an interface layer");
  read_external_ = std::move(read_external);
  write_external_ = std::move(write_external);
}

const Behavior* BehaviorLayer::find_behavior(const std::string& name) const {
  for (const auto& b : behaviors_)
    if (b->name() == name) return b.get();
  return nullptr;
}

const InhibitionGraph& BehaviorLayer::graph() const {
  if (!compiled_) throw Error(Errc::NotCompiled, "layer '" + name_ + "' queried before compile");
  return graph_;
}

std::map<std::string, ActivationRecord> BehaviorLayer::resolve_activations(
    const std::map<std::string, double>& requested) const {
  if (!compiled_) throw Error(Errc::NotCompiled, "layer '" + name_ + "' resolved before compile");
  if (requested.size() != behaviors_.size())
    throw Error(Errc::UnknownBehavior, "requested map must cover exactly the behaviors of layer '" + name_ + "'");
  std::vector<double> levels(behaviors_.size());
  for (std::size_t i = 0; i < behaviors_.size(); ++i) {
    auto it = requested.find(behaviors_[i]->name());
    if (it == requested.end())
      throw Error(Errc::UnknownBehavior,
                  "no requested level for behavior '" + behaviors_[i]->name() + "'");
    if (!(it->second >= 0.0 && it->second <= 1.0))
      throw Error(Errc::ActivationOutOfRange, "behavior '" + behaviors_[i]->name() + "' requested " +
                                                  std::to_string(it->second));
    levels[i] = it->second;
  }
  const auto records = resolve_true_levels(graph_, levels);
  std::map<std::string, ActivationRecord> out;
  for (std::size_t i = 0; i < behaviors_.size(); ++i) out[behaviors_[i]->name()] = records[i];
  return out;
}

void BehaviorLayer::require_open(const char* op) const {
  if (compiled_)
    throw Error(Errc::RecompileError,
                std::string(op) + " on layer '" + name_ + "': registration is closed after compile");
}

std::vector<std::string> BehaviorLayer::behavior_names() const {
  std::vector<std::string> names;
  names.reserve(behaviors_.size());
  for (const auto& b : behaviors_) names.push_back(b->name());
  return names;
}

void BehaviorLayer::compile() {
  graph_ = compile_inhibitions(behavior_names(), edges_);
  for (auto& ch : channels_) ch->reset_to_default();
  compiled_ = true;
}

void BehaviorLayer::bind_sensors(const std::map<std::string, ChannelBase*>& registry) {
  for (auto& sensor : sensors_) {
    auto it = registry.find(sensor->actuator_name());
    if (it == registry.end())
      throw Error(Errc::UnboundSensor, "sensor '" + sensor->name() + "' in layer '" + name_ +
                                           "' references unknown actuator '" + sensor->actuator_name() + "'");
    if (!sensor->bind(*it->second))
      throw Error(Errc::UnboundSensor, "sensor '" + sensor->name() + "' in layer '" + name_ +
                                           "' expects a different value kind than actuator '" +
                                           sensor->actuator_name() + "' (" + it->second->kind_name() + ")");
    sensor->latch();
  }
}

LayerStepReport BehaviorLayer::run_step() {
  if (interface_ && read_external_)
    guarded("read_external hook of layer '" + name_ + "'", read_external_);

  for (auto& sensor : sensors_) sensor->latch();

  std::vector<double> requested(behaviors_.size());
  for (std::size_t i = 0; i < behaviors_.size(); ++i) {
    double level = 0.0;
    guarded("compute_activation of behavior '" + behaviors_[i]->name() + "' in layer '" + name_ + "'",
            [&] { level = behaviors_[i]->compute_activation(); });
    if (!(level >= 0.0 && level <= 1.0))
      throw Error(Errc::ActivationOutOfRange, "behavior '" + behaviors_[i]->name() + "' in layer '" +
                                                  name_ + "' requested " + std::to_string(level));
    requested[i] = level;
  }

  const auto records = resolve_true_levels(graph_, requested);
  for (std::size_t i = 0; i < behaviors_.size(); ++i) behaviors_[i]->record_ = records[i];

  for (std::size_t idx : graph_.topo_order) {
    if (records[idx].true_level > 0.0)
      guarded("execute of behavior '" + behaviors_[idx]->name() + "' in layer '" + name_ + "'",
              [&] { behaviors_[idx]->execute(); });
  }

  LayerStepReport report;
  report.layer = name_;
  report.activations.reserve(behaviors_.size());
  for (std::size_t i = 0; i < behaviors_.size(); ++i)
    report.activations.emplace_back(behaviors_[i]->name(), records[i]);
  report.commits.reserve(channels_.size());
  for (auto& ch : channels_) {
    ch->commit();
    report.commits.push_back({ch->name(), ch->committed_json(), ch->updated()});
  }

  if (interface_ && write_external_)
    guarded("write_external hook of layer '" + name_ + "'", write_external_);

  return report;
}

} // namespace bkit::bc
