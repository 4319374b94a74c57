#pragma once

namespace bkit::bc {

/// Outcome of inhibition resolution for one behavior in one step.
/// true_level <= requested always; a behavior executes iff active.
struct ActivationRecord {
  double requested = 0.0;
  double true_level = 0.0;
  bool active = false;

  friend bool operator==(const ActivationRecord&, const ActivationRecord&) = default;
};

} // namespace bkit::bc
