#pragma once

#include <string>

#include "bkit/bc/manager.hpp"

namespace bkit::bc {

/// Renders every layer's compiled inhibition network as DOT text.
///
/// The styling contract is fixed and golden-tested: explicit chaining edges
/// use the double-line color "black:invis:black", explicit non-chaining edges
/// use style=solid, derived implicit edges use style=dashed. Node labels
/// carry the behavior's topological index in brackets. Identical managers
/// yield byte-identical output.
std::string export_graph_dot(const BehaviorManager& manager);

} // namespace bkit::bc
