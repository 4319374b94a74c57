#pragma once

#include <cstdint>
#include <functional>

#include "bkit/sc/state_queue.hpp"

namespace bkit::sc {

enum class Status { Running, Halted };

std::string_view to_string(Status s);

/// Hooks into the stages of the step routine. Any of them may be left unset.
/// Exceptions thrown from a hook abort the current step and surface to the
/// caller; the controller is left as of the last completed sub-stage.
struct Callbacks {
  std::function<void()> pre_step;
  std::function<void()> post_step;
  std::function<void()> pre_execute;
  std::function<void()> post_execute;
  std::function<void(State&)> on_activate;
  std::function<void(State&)> on_deactivate;
};

/// Executes state instances in the order stipulated by its state queue.
///
/// step() runs one cycle and is meant to be driven from a fixed-rate loop.
/// Each cycle first checks whether the current instance flagged completion in
/// the previous cycle; if so (or if there is no current instance) it
/// deactivates the old instance and activates at most one successor from the
/// head of the queue, then executes the current instance once. A controller
/// with no current instance and an empty queue is Halted; enqueueing makes it
/// Running again.
class StateController {
public:
  StateController() = default;

  StateController(const StateController&) = delete;
  StateController& operator=(const StateController&) = delete;
  StateController(StateController&&) = default;
  StateController& operator=(StateController&&) = default;

  StateQueue& queue() noexcept { return queue_; }
  const StateQueue& queue() const noexcept { return queue_; }

  Callbacks& callbacks() noexcept { return callbacks_; }

  const StatePtr& current() const noexcept { return current_; }

  Status status() const noexcept {
    return (current_ || !queue_.empty()) ? Status::Running : Status::Halted;
  }

  /// Cycles completed so far (incremented at the start of each step).
  std::uint64_t cycle_count() const noexcept { return cycle_count_; }

  /// Shortcut for the common next-state pattern: appends to the tail, which
  /// for a single-item queue makes inst the unique successor.
  void enqueue(StatePtr inst) { queue_.push_back(std::move(inst)); }

  /// Plans inst as the very next state to activate.
  void enqueue_front(StatePtr inst) { queue_.push_front(std::move(inst)); }

  /// Empties the queue; the current instance is unaffected. Returns the
  /// number of removed instances, all still Pending.
  std::size_t clear_queue() { return queue_.clear(); }

  /// Runs one cycle. Callable in any status; stepping a Halted controller
  /// only fires the pre/post-step hooks and returns Halted.
  Status step() {
    ++cycle_count_;
    if (callbacks_.pre_step) callbacks_.pre_step();

    if (!current_ || current_->completion_flag()) {
      if (current_) {
        if (callbacks_.on_deactivate) callbacks_.on_deactivate(*current_);
        current_->mark_complete();
        current_.reset();
      }
      if (!queue_.empty()) {
        StatePtr next = queue_.pop_front();
        next->mark_active();
        current_ = std::move(next);
        if (callbacks_.on_activate) callbacks_.on_activate(*current_);
      }
    }

    if (current_) {
      if (callbacks_.pre_execute) callbacks_.pre_execute();
      current_->execute(*this);
      if (callbacks_.post_execute) callbacks_.post_execute();
    }

    if (callbacks_.post_step) callbacks_.post_step();
    return status();
  }

private:
  StateQueue queue_;
  StatePtr current_;
  Callbacks callbacks_;
  std::uint64_t cycle_count_ = 0;
};

} // namespace bkit::sc
