#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "bkit/sim/trace.hpp"

namespace bkit::cli {

/// Writes a trace as JSON lines: one record per line with fields tick, kind
/// and payload. The first record is a header carrying the tool version, the
/// scenario name and the seed. Records keep (tick, emission) order, which
/// makes repeated runs byte-identical.
void write_trace(std::ostream& out, const std::string& scenario_name, std::int64_t seed,
                 const sim::Trace& trace);

} // namespace bkit::cli
