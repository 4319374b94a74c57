#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "bkit/error.hpp"

namespace bkit::sc {

class StateController;

enum class Lifecycle { Pending, Active, Complete };

std::string_view to_string(Lifecycle lc);

/// A single-use, parametrized unit of sequential activity.
///
/// Derived classes fix their parameters at construction time and implement
/// execute(), which runs once per controller cycle while the instance is the
/// current one. An instance signals that it is done by calling set_complete();
/// the controller acts on the flag at the next cycle's transition check. Once
/// deactivated an instance is Complete forever — re-entering a state means
/// constructing a fresh instance and enqueueing it.
class State {
public:
  explicit State(std::string kind) : kind_(std::move(kind)) {}
  virtual ~State() = default;

  State(const State&) = delete;
  State& operator=(const State&) = delete;

  const std::string& kind() const noexcept { return kind_; }

  /// Short human-readable parameter summary for traces; empty by default.
  virtual std::string detail() const { return {}; }

  Lifecycle lifecycle() const noexcept { return lifecycle_; }
  bool completion_flag() const noexcept { return completion_flag_; }

  /// Marks the instance as done. Only valid while Active; idempotent within
  /// a cycle. The transition happens at the next step, not immediately.
  void set_complete() {
    if (lifecycle_ != Lifecycle::Active)
      throw Error(Errc::NotActive,
                  "set_complete on " + std::string(to_string(lifecycle_)) + " instance of state '" + kind_ + "'");
    completion_flag_ = true;
  }

  /// Runs one cycle's worth of work. ctrl is the owning controller; the
  /// instance may freely edit its queue to plan successors.
  virtual void execute(StateController& ctrl) = 0;

private:
  friend class StateController;

  void mark_active() { lifecycle_ = Lifecycle::Active; }
  void mark_complete() { lifecycle_ = Lifecycle::Complete; }

  std::string kind_;
  Lifecycle lifecycle_ = Lifecycle::Pending;
  bool completion_flag_ = false;
};

using StatePtr = std::shared_ptr<State>;

template <typename S, typename... Args>
std::shared_ptr<S> make_state(Args&&... args) {
  return std::make_shared<S>(std::forward<Args>(args)...);
}

} // namespace bkit::sc
