#include "bkit/bc/inhibition_graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace bkit::bc {

namespace {

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error(Errc::UnknownBehavior, "inhibition references unknown behavior '" + name + "'");
}

// DFS over the explicit edges; on the first back edge, reconstructs the cycle
// from the recursion stack and reports it by name.
void check_acyclic(const std::vector<std::string>& names,
                   const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = names.size();
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::size_t> stack;

  // Iterative DFS keeping (node, next-child) frames so the grey path is the
  // current stack.
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    mark[root] = Mark::Grey;
    stack.push_back(root);
    while (!frames.empty()) {
      auto& [node, child] = frames.back();
      if (child < adj[node].size()) {
        const std::size_t next = adj[node][child++];
        if (mark[next] == Mark::Grey) {
          auto it = std::find(stack.begin(), stack.end(), next);
          std::string msg = "inhibition cycle: ";
          for (; it != stack.end(); ++it) msg += names[*it] + " -> ";
          msg += names[next];
          throw Error(Errc::CycleError, msg);
        }
        if (mark[next] == Mark::White) {
          mark[next] = Mark::Grey;
          stack.push_back(next);
          frames.emplace_back(next, 0);
        }
      } else {
        mark[node] = Mark::Black;
        stack.pop_back();
        frames.pop_back();
      }
    }
  }
}

} // namespace

InhibitionGraph compile_inhibitions(const std::vector<std::string>& names,
                                    const std::vector<InhibitionEdge>& edges) {
  const std::size_t n = names.size();
  InhibitionGraph graph;

  std::set<std::tuple<std::size_t, std::size_t, bool>> seen;
  for (const auto& e : edges) {
    const std::size_t s = index_of(names, e.source);
    const std::size_t t = index_of(names, e.target);
    if (s == t)
      throw Error(Errc::CycleError, "inhibition cycle: " + e.source + " -> " + e.target);
    if (seen.insert({s, t, e.chaining}).second) graph.explicit_edges.emplace_back(s, t, e.chaining);
  }

  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [s, t, chaining] : graph.explicit_edges) adj[s].push_back(t);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  check_acyclic(names, adj);

  // Reachability over the chaining subgraph; implicit edges are the closure
  // pairs not already written explicitly (in either flavour).
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [s, t, chaining] : graph.explicit_edges)
    if (chaining) reach[s][t] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (reach[k][j]) reach[i][j] = true;
    }

  std::vector<std::vector<bool>> explicit_pair(n, std::vector<bool>(n, false));
  for (const auto& [s, t, chaining] : graph.explicit_edges) explicit_pair[s][t] = true;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j] && !explicit_pair[i][j]) graph.implicit_edges.emplace_back(i, j);

  graph.inhibitors.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      if (explicit_pair[i][j] || reach[i][j]) graph.inhibitors[j].push_back(i);
  }

  // Kahn's algorithm, always emitting the ready behavior with the smallest
  // registration index.
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i : graph.inhibitors[j]) {
      out[i].push_back(j);
      ++indegree[j];
    }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    graph.topo_order.push_back(i);
    for (std::size_t j : out[i])
      if (--indegree[j] == 0) ready.insert(j);
  }

  return graph;
}

std::vector<ActivationRecord> resolve_true_levels(const InhibitionGraph& graph,
                                                  const std::vector<double>& requested) {
  std::vector<ActivationRecord> records(requested.size());
  for (std::size_t i : graph.topo_order) {
    double level = requested[i];
    for (std::size_t s : graph.inhibitors[i]) level *= 1.0 - records[s].true_level;
    records[i] = ActivationRecord{requested[i], level, level > 0.0};
  }
  return records;
}

} // namespace bkit::bc
