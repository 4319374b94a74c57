#include "bkit/error.hpp"

namespace bkit {

std::string_view to_string(Errc code) {
  switch (code) {
  case Errc::EnqueueCompleted: return "EnqueueCompleted";
  case Errc::DuplicateInstance: return "DuplicateInstance";
  case Errc::IndexOutOfRange: return "IndexOutOfRange";
  case Errc::NotActive: return "NotActive";
  case Errc::CycleError: return "CycleError";
  case Errc::UnknownBehavior: return "UnknownBehavior";
  case Errc::UnboundSensor: return "UnboundSensor";
  case Errc::DuplicateName: return "DuplicateName";
  case Errc::RebindError: return "RebindError";
  case Errc::RecompileError: return "RecompileError";
  case Errc::NotCompiled: return "NotCompiled";
  case Errc::ActivationOutOfRange: return "ActivationOutOfRange";
  case Errc::MultipleWriters: return "MultipleWriters";
  case Errc::NotAggregatable: return "NotAggregatable";
  case Errc::HookFailure: return "HookFailure";
  case Errc::NotABehaviorScenario: return "NotABehaviorScenario";
  }
  return "UnknownError";
}

} // namespace bkit
