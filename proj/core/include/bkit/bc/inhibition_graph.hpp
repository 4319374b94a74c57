#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bkit/bc/activation.hpp"
#include "bkit/error.hpp"

namespace bkit::bc {

/// One user-written inhibition: source suppresses target. Chaining edges
/// compose transitively with other chaining edges; non-chaining ones do not.
struct InhibitionEdge {
  std::string source;
  std::string target;
  bool chaining = false;

  friend bool operator==(const InhibitionEdge&, const InhibitionEdge&) = default;
};

/// Compiled per-layer inhibition network. Indices refer to behaviors in
/// registration order.
struct InhibitionGraph {
  /// Explicit edges by index, in registration order (exact duplicates removed).
  std::vector<std::tuple<std::size_t, std::size_t, bool>> explicit_edges;
  /// Transitive closure of the chaining subgraph minus all explicit pairs,
  /// sorted by (source, target). Implicit edges are themselves chaining.
  std::vector<std::pair<std::size_t, std::size_t>> implicit_edges;
  /// Total order consistent with explicit and implicit edges (sources first),
  /// ties broken by registration index.
  std::vector<std::size_t> topo_order;
  /// Per behavior: deduplicated inhibitor indices over explicit + implicit
  /// edges, ascending.
  std::vector<std::vector<std::size_t>> inhibitors;
};

/// Compiles the explicit edge list against the behavior name table.
///
/// Rejects edges naming unknown behaviors and any cycle in the explicit
/// edges (a cycle involving implicit edges always implies one there, so the
/// diagnostic can cite user-written edges only). The cycle error message
/// names the offending cycle.
InhibitionGraph compile_inhibitions(const std::vector<std::string>& names,
                                    const std::vector<InhibitionEdge>& edges);

/// Refines requested activation levels into true levels by traversing the
/// topological order and applying each inhibitor multiplicatively:
/// true(t) = requested(t) * prod over inhibitors i of (1 - true(i)).
/// requested values must already be validated to lie in [0, 1].
std::vector<ActivationRecord> resolve_true_levels(const InhibitionGraph& graph,
                                                  const std::vector<double>& requested);

} // namespace bkit::bc
