#pragma once

#include <functional>
#include <string>
#include <utility>

#include "bkit/bc/activation.hpp"
#include "bkit/bc/channel.hpp"

namespace bkit::bc {

/// A named unit of activity inside a behavior layer.
///
/// Every step the layer queries compute_activation() for a requested level in
/// [0, 1] (values outside the interval are an error, not clamped), refines it
/// against the layer's inhibition network, and calls execute() iff the
/// resulting true level is positive. Multiple behaviors may be active at
/// once.
class Behavior {
public:
  explicit Behavior(std::string name) : name_(std::move(name)) {}
  virtual ~Behavior() = default;

  Behavior(const Behavior&) = delete;
  Behavior& operator=(const Behavior&) = delete;

  const std::string& name() const noexcept { return name_; }

  /// Position in the layer's registration order; fixed at add time.
  std::size_t registration_index() const noexcept { return registration_index_; }

  /// This step's activation record (previous step's until the layer has
  /// resolved the current one).
  const ActivationRecord& activation() const noexcept { return record_; }

  virtual double compute_activation() = 0;
  virtual void execute() = 0;

  /// Publishes to an actuator weighted by this behavior's true level.
  template <typename T>
  void write(Channel<T>& channel, T value) {
    channel.write(std::move(value), record_.true_level);
  }

private:
  friend class BehaviorLayer;

  std::string name_;
  std::size_t registration_index_ = 0;
  ActivationRecord record_;
};

/// Behavior defined by a pair of callables; handy for tests and small tools.
class LambdaBehavior final : public Behavior {
public:
  LambdaBehavior(std::string name, std::function<double()> activation,
                 std::function<void(Behavior&)> execute = {})
      : Behavior(std::move(name)),
        activation_(std::move(activation)),
        execute_(std::move(execute)) {}

  double compute_activation() override { return activation_ ? activation_() : 0.0; }

  void execute() override {
    if (execute_) execute_(*this);
  }

private:
  std::function<double()> activation_;
  std::function<void(Behavior&)> execute_;
};

} // namespace bkit::bc
