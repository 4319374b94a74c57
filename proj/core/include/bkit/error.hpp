#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bkit {

/// Error codes shared by the state-controller and behavior-control engines.
enum class Errc {
  // state controller
  EnqueueCompleted,
  DuplicateInstance,
  IndexOutOfRange,
  NotActive,
  // behavior control
  CycleError,
  UnknownBehavior,
  UnboundSensor,
  DuplicateName,
  RebindError,
  RecompileError,
  NotCompiled,
  ActivationOutOfRange,
  MultipleWriters,
  NotAggregatable,
  HookFailure,
  // command front end
  NotABehaviorScenario,
};

std::string_view to_string(Errc code);

/// Exception carrying a machine-checkable code plus a human-readable message.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  Errc code() const noexcept { return code_; }

  /// Message without the code prefix, for rewrapping with extra context.
  const std::string& message() const noexcept { return message_; }

private:
  Errc code_;
  std::string message_;
};

} // namespace bkit
