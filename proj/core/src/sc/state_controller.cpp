#include "bkit/sc/state_controller.hpp"

namespace bkit::sc {

std::string_view to_string(Lifecycle lc) {
  switch (lc) {
  case Lifecycle::Pending: return "Pending";
  case Lifecycle::Active: return "Active";
  case Lifecycle::Complete: return "Complete";
  }
  return "?";
}

std::string_view to_string(Status s) {
  return s == Status::Running ? "Running" : "Halted";
}

} // namespace bkit::sc
