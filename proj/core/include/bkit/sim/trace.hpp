#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace bkit::sim {

/// One observable event of a scenario run. Events within a tick appear in
/// emission order.
struct TraceEvent {
  std::int64_t tick = 0;
  std::string kind;
  nlohmann::json payload;
};

using Trace = std::vector<TraceEvent>;

/// Collects trace events while a scenario runs; the driver advances the tick.
class TraceRecorder {
public:
  void set_tick(std::int64_t tick) noexcept { tick_ = tick; }
  std::int64_t tick() const noexcept { return tick_; }

  void emit(std::string kind, nlohmann::json payload) {
    events_.push_back(TraceEvent{tick_, std::move(kind), std::move(payload)});
  }

  const Trace& events() const noexcept { return events_; }
  Trace take() { return std::move(events_); }

private:
  Trace events_;
  std::int64_t tick_ = 0;
};

} // namespace bkit::sim
