#pragma once

// Brute-force reference for inhibition semantics, kept independent of the
// library: reachability by per-node BFS instead of matrix closure, and true
// levels by Jacobi fixpoint iteration instead of topological traversal.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  bool chaining = false;
};

struct Layer {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<double> requested;
};

// Pairs (a, c) connected by a chaining-only path of length >= 1, found by BFS
// from every node over the chaining edges.
inline std::set<std::pair<std::size_t, std::size_t>> chaining_reach(std::size_t n,
                                                                    const std::vector<Edge>& edges) {
  std::set<std::pair<std::size_t, std::size_t>> reach;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> frontier{start};
    while (!frontier.empty()) {
      const std::size_t node = frontier.back();
      frontier.pop_back();
      for (const Edge& e : edges) {
        if (!e.chaining || e.source != node || visited[e.target]) continue;
        visited[e.target] = true;
        reach.emplace(start, e.target);
        frontier.push_back(e.target);
      }
    }
  }
  return reach;
}

inline std::set<std::pair<std::size_t, std::size_t>> explicit_pairs(const std::vector<Edge>& edges) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : edges) out.emplace(e.source, e.target);
  return out;
}

// Implicit inhibitions: chaining reachability minus everything written
// explicitly (in either flavour).
inline std::set<std::pair<std::size_t, std::size_t>> implicit_pairs(std::size_t n,
                                                                    const std::vector<Edge>& edges) {
  auto reach = chaining_reach(n, edges);
  for (const auto& p : explicit_pairs(edges)) reach.erase(p);
  return reach;
}

// Effective inhibitor pairs: explicit union implicit.
inline std::set<std::pair<std::size_t, std::size_t>> effective_pairs(std::size_t n,
                                                                     const std::vector<Edge>& edges) {
  auto pairs = explicit_pairs(edges);
  auto implicit = implicit_pairs(n, edges);
  pairs.insert(implicit.begin(), implicit.end());
  return pairs;
}

// Jacobi fixpoint: sweep true(t) = requested(t) * prod (1 - true(s)) until
// nothing changes. On an acyclic network this settles within n sweeps.
inline std::vector<double> fixpoint_true_levels(const Layer& layer) {
  const auto pairs = effective_pairs(layer.n, layer.edges);
  std::vector<double> level = layer.requested;
  for (std::size_t sweep = 0; sweep <= layer.n + 1; ++sweep) {
    std::vector<double> next(layer.n);
    for (std::size_t t = 0; t < layer.n; ++t) {
      double value = layer.requested[t];
      for (const auto& [s, target] : pairs)
        if (target == t) value *= 1.0 - level[s];
      next[t] = value;
    }
    if (next == level) return level;
    level = std::move(next);
  }
  throw std::logic_error("fixpoint did not settle; the edge set cannot be acyclic");
}

// Random acyclic layer: edges only run from lower to higher index. Requested
// levels mix interior values with exact 0s and 1s.
inline Layer random_layer(std::mt19937& rng, std::size_t max_behaviors = 6,
                          std::size_t max_edges = 12) {
  Layer layer;
  layer.n = std::uniform_int_distribution<std::size_t>(1, max_behaviors)(rng);
  const std::size_t wanted = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t k = 0; k < wanted && layer.n >= 2; ++k) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, layer.n - 2)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(a + 1, layer.n - 1)(rng);
    if (!used.emplace(a, b).second) continue;
    layer.edges.push_back(Edge{a, b, std::bernoulli_distribution(0.5)(rng)});
  }
  layer.requested.resize(layer.n);
  for (auto& r : layer.requested) {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: r = 0.0; break;
    case 1: r = 1.0; break;
    default: r = std::uniform_real_distribution<double>(0.0, 1.0)(rng); break;
    }
  }
  return layer;
}

} // namespace oracle
