#include "trace_file.hpp"

#include "bkit/version.hpp"

namespace bkit::cli {

void write_trace(std::ostream& out, const std::string& scenario_name, std::int64_t seed,
                 const sim::Trace& trace) {
  const nlohmann::json header{
      {"tick", 0},
      {"kind", "header"},
      {"payload", {{"version", std::string(kVersion)}, {"scenario", scenario_name}, {"seed", seed}}},
  };
  out << header.dump() << "\n";
  for (const auto& event : trace) {
    const nlohmann::json record{{"tick", event.tick}, {"kind", event.kind}, {"payload", event.payload}};
    out << record.dump() << "\n";
  }
}

} // namespace bkit::cli
