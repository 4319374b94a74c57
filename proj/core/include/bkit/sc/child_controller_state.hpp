#pragma once

#include "bkit/sc/state_controller.hpp"

namespace bkit::sc {

/// State whose execution runs exactly one cycle of a subordinate controller.
///
/// Composing these builds hierarchical machines: a parent controller switches
/// between groups of states, each group living in its own child controller
/// with its own queue. The instance flags completion once the child halts.
class ChildControllerState : public State {
public:
  ChildControllerState(std::string kind, StateController child)
      : State(std::move(kind)), child_(std::move(child)) {}

  StateController& child() noexcept { return child_; }
  const StateController& child() const noexcept { return child_; }

  void execute(StateController&) override {
    if (child_.step() == Status::Halted && !completion_flag()) set_complete();
  }

private:
  StateController child_;
};

/// Wraps a controller as a single-use state instance. The child must not be
/// shared with another parent; passing by value enforces that.
inline std::shared_ptr<ChildControllerState> make_child_state(StateController child,
                                                              std::string kind = "ChildController") {
  return std::make_shared<ChildControllerState>(std::move(kind), std::move(child));
}

} // namespace bkit::sc
