#include "bkit/bc/export_graph.hpp"

#include <sstream>

namespace bkit::bc {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

std::string export_graph_dot(const BehaviorManager& manager) {
  if (!manager.compiled()) throw Error(Errc::NotCompiled, "graph export before compile");

  std::ostringstream out;
  out << "digraph inhibition_network {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (std::size_t li = 0; li < manager.layer_count(); ++li) {
    const BehaviorLayer& layer = manager.layer_at(li);
    const InhibitionGraph& graph = layer.graph();
    out << "  subgraph cluster_" << li << " {\n";
    out << "    label=" << quoted(layer.name()) << ";\n";

    std::vector<std::size_t> topo_index(layer.behavior_count());
    for (std::size_t pos = 0; pos < graph.topo_order.size(); ++pos)
      topo_index[graph.topo_order[pos]] = pos;

    for (std::size_t i = 0; i < layer.behavior_count(); ++i) {
      const std::string& name = layer.behavior_at(i).name();
      out << "    " << quoted(name) << " [label=" << quoted(name + " [" + std::to_string(topo_index[i]) + "]")
          << "];\n";
    }
    for (const auto& [s, t, chaining] : graph.explicit_edges) {
      out << "    " << quoted(layer.behavior_at(s).name()) << " -> " << quoted(layer.behavior_at(t).name());
      out << (chaining ? " [color=\"black:invis:black\"];\n" : " [style=solid];\n");
    }
    for (const auto& [s, t] : graph.implicit_edges) {
      out << "    " << quoted(layer.behavior_at(s).name()) << " -> " << quoted(layer.behavior_at(t).name())
          << " [style=dashed];\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace bkit::bc
