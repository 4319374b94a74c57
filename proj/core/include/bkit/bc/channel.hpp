#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bkit/error.hpp"
#include "bkit/geometry.hpp"

namespace bkit::bc {

class BehaviorLayer;

/// Value types that support activation-weighted averaging.
template <typename T>
concept WeightedAveragable = requires(T v, double w) {
  { v * w } -> std::convertible_to<T>;
  { v + v } -> std::convertible_to<T>;
};

template <typename T>
std::string value_kind_name() {
  if constexpr (std::same_as<T, bool>) return "bool";
  else if constexpr (std::integral<T>) return "integer";
  else if constexpr (std::floating_point<T>) return "scalar";
  else if constexpr (std::same_as<T, Pose2D>) return "pose";
  else if constexpr (std::same_as<T, Vec2>) return "vec2";
  else if constexpr (std::same_as<T, std::string>) return "string";
  else return "opaque";
}

/// Name-keyed data channel between layers. Behaviors publish through an
/// actuator during execution; the written data becomes visible to sensors at
/// the owning layer's commit point, never mid-step. A non-aggregatable
/// channel takes at most one write per step; an aggregatable one commits the
/// weighted mean of all writes, the weights being the writers' true
/// activation levels.
class ChannelBase {
public:
  virtual ~ChannelBase() = default;

  ChannelBase(const ChannelBase&) = delete;
  ChannelBase& operator=(const ChannelBase&) = delete;

  const std::string& name() const noexcept { return name_; }
  bool aggregatable() const noexcept { return aggregatable_; }

  /// True when the most recent commit folded in fresh writes (an aggregation
  /// whose total weight was zero retains the previous value and reports
  /// false).
  bool updated() const noexcept { return updated_; }

  virtual std::string kind_name() const = 0;
  virtual nlohmann::json committed_json() const = 0;

protected:
  ChannelBase(std::string name, bool aggregatable)
      : name_(std::move(name)), aggregatable_(aggregatable) {}

  std::string name_;
  bool aggregatable_ = false;
  bool updated_ = false;

private:
  friend class BehaviorLayer;
  virtual void commit() = 0;
  virtual void reset_to_default() = 0;
};

template <typename T>
class Channel final : public ChannelBase {
public:
  Channel(std::string name, T default_value, bool aggregatable)
      : ChannelBase(std::move(name), aggregatable),
        default_(default_value),
        committed_(std::move(default_value)) {
    if (aggregatable && !WeightedAveragable<T>)
      throw Error(Errc::NotAggregatable, "channel '" + name_ + "' holds " + value_kind_name<T>() +
                                             " data, which cannot be averaged");
  }

  const T& committed() const noexcept { return committed_; }
  const T& default_value() const noexcept { return default_; }

  /// Queues a write for the next commit. weight is the writer's true
  /// activation level and only matters for aggregatable channels.
  void write(T value, double weight) {
    if (!(weight >= 0.0 && weight <= 1.0))
      throw Error(Errc::ActivationOutOfRange,
                  "write weight " + std::to_string(weight) + " on channel '" + name_ + "'");
    if (!aggregatable_ && !pending_.empty())
      throw Error(Errc::MultipleWriters,
                  "channel '" + name_ + "' is not aggregatable and was already written this step");
    pending_.emplace_back(std::move(value), weight);
  }

  std::string kind_name() const override { return value_kind_name<T>(); }
  nlohmann::json committed_json() const override { return nlohmann::json(committed_); }

private:
  void commit() override {
    updated_ = false;
    if (pending_.empty()) return;
    if (!aggregatable_) {
      committed_ = std::move(pending_.front().first);
      updated_ = true;
    } else if constexpr (WeightedAveragable<T>) {
      double total = 0.0;
      for (const auto& [value, weight] : pending_) total += weight;
      if (total > 0.0) {
        T sum = pending_.front().first * (pending_.front().second / total);
        for (std::size_t i = 1; i < pending_.size(); ++i)
          sum = sum + pending_[i].first * (pending_[i].second / total);
        committed_ = std::move(sum);
        updated_ = true;
      }
    }
    pending_.clear();
  }

  void reset_to_default() override {
    committed_ = default_;
    pending_.clear();
    updated_ = false;
  }

  T default_;
  T committed_;
  std::vector<std::pair<T, double>> pending_;
};

class SensorBase {
public:
  virtual ~SensorBase() = default;

  const std::string& name() const noexcept { return name_; }
  const std::string& actuator_name() const noexcept { return actuator_name_; }

protected:
  SensorBase(std::string name, std::string actuator_name)
      : name_(std::move(name)), actuator_name_(std::move(actuator_name)) {}

  std::string name_;
  std::string actuator_name_;

private:
  friend class BehaviorLayer;
  virtual bool bind(ChannelBase& channel) = 0;
  virtual void latch() = 0;
};

/// Receives the committed value of one actuator. The value is latched at the
/// owning layer's latch phase, so within a step it never reflects pending
/// writes; a sensor in the same layer as its actuator sees the previous
/// step's commit.
template <typename T>
class Sensor final : public SensorBase {
public:
  using SensorBase::SensorBase;

  const T& value() const {
    if (!source_)
      throw Error(Errc::NotCompiled, "sensor '" + name_ + "' read before compile");
    return latched_;
  }

private:
  bool bind(ChannelBase& channel) override {
    source_ = dynamic_cast<const Channel<T>*>(&channel);
    return source_ != nullptr;
  }

  void latch() override { latched_ = source_->committed(); }

  const Channel<T>* source_ = nullptr;
  T latched_{};
};

} // namespace bkit::bc
