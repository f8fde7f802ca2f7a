#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "vbvr/core/error.hpp"

namespace vbvr::solvers {

/// Directed graph with 2-D layout, node ids 0..n-1.
struct DirectedGraph {
  struct NodePos {
    double x = 0;
    double y = 0;
  };
  std::vector<NodePos> layout;
  std::set<std::pair<int, int>> edges;  // (from, to), no self-loops
  int start = 0;
  int goal = 0;

  int size() const { return static_cast<int>(layout.size()); }
  bool has_edge(int a, int b) const { return edges.count({a, b}) != 0; }
};

using NodePath = std::vector<int>;

/// Minimum-hop directed path; layer ties resolve to the smallest node id,
/// again via greedy descent over distances-to-goal.
inline NodePath digraph_shortest(const DirectedGraph& g) {
  const int n = g.size();
  if (g.start < 0 || g.start >= n || g.goal < 0 || g.goal >= n) {
    throw InvalidInputError("bad graph endpoints");
  }
  // reverse BFS from the goal
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> frontier{g.goal};
  dist[static_cast<std::size_t>(g.goal)] = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (const auto& [a, b] : g.edges) {
        if (b == v && dist[static_cast<std::size_t>(a)] < 0) {
          dist[static_cast<std::size_t>(a)] = dist[static_cast<std::size_t>(v)] + 1;
          next.push_back(a);
        }
      }
    }
    frontier = std::move(next);
  }
  if (dist[static_cast<std::size_t>(g.start)] < 0) throw NoPathError("goal unreachable");

  NodePath path{g.start};
  int cur = g.start;
  while (cur != g.goal) {
    const int d = dist[static_cast<std::size_t>(cur)];
    int pick = -1;
    for (int v = 0; v < n; ++v) {  // ascending id = deterministic tie-break
      if (g.has_edge(cur, v) && dist[static_cast<std::size_t>(v)] == d - 1) {
        pick = v;
        break;
      }
    }
    cur = pick;
    path.push_back(cur);
  }
  return path;
}

}  // namespace vbvr::solvers
