#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "vbvr/core/error.hpp"

namespace vbvr::solvers {

struct Cell {
  int r = 0;
  int c = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Rectangular grid world for the navigation families. Payload semantics
/// (targets, keys, doors) live with the generators; the solver only needs
/// blocked cells.
struct Grid {
  int rows = 0;
  int cols = 0;
  std::set<Cell> blocked;
  Cell start;
  Cell goal;

  bool in_bounds(Cell c) const { return c.r >= 0 && c.r < rows && c.c >= 0 && c.c < cols; }
  bool passable(Cell c) const { return in_bounds(c) && blocked.count(c) == 0; }
};

using Path = std::vector<Cell>;

/// Fixed neighbor order: up, down, left, right. Both the search and the
/// greedy reconstruction iterate in this order, which pins path uniqueness.
inline std::array<Cell, 4> neighbors4(Cell c) {
  return {Cell{c.r - 1, c.c}, Cell{c.r + 1, c.c}, Cell{c.r, c.c - 1}, Cell{c.r, c.c + 1}};
}

namespace grid_detail {

inline std::vector<int> bfs_distances(const Grid& g, Cell from) {
  std::vector<int> dist(static_cast<std::size_t>(g.rows) * g.cols, -1);
  const auto idx = [&g](Cell c) { return static_cast<std::size_t>(c.r) * g.cols + c.c; };
  std::deque<Cell> q;
  if (!g.passable(from)) return dist;
  dist[idx(from)] = 0;
  q.push_back(from);
  while (!q.empty()) {
    const Cell cur = q.front();
    q.pop_front();
    for (Cell n : neighbors4(cur)) {
      if (g.passable(n) && dist[idx(n)] < 0) {
        dist[idx(n)] = dist[idx(cur)] + 1;
        q.push_back(n);
      }
    }
  }
  return dist;
}

}  // namespace grid_detail

/// Shortest 4-neighbor path avoiding blocked cells. Ties resolve by walking
/// from the start and taking the first neighbor (up, down, left, right
/// order) that stays on a shortest route, so equal inputs always give the
/// identical cell sequence, not just the same length.
inline Path bfs_shortest(const Grid& g) {
  if (!g.passable(g.start) || !g.in_bounds(g.goal)) throw InvalidInputError("bad grid endpoints");
  const auto idx = [&g](Cell c) { return static_cast<std::size_t>(c.r) * g.cols + c.c; };
  const auto dist_to_goal = grid_detail::bfs_distances(g, g.goal);
  if (dist_to_goal[idx(g.start)] < 0) throw NoPathError("goal unreachable");
  Path path{g.start};
  Cell cur = g.start;
  while (cur != g.goal) {
    const int d = dist_to_goal[idx(cur)];
    for (Cell n : neighbors4(cur)) {
      if (g.passable(n) && dist_to_goal[idx(n)] == d - 1) {
        cur = n;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

/// Shortest start -> (all targets, any order) -> goal route; every leg is a
/// bfs_shortest leg. Exact permutation search, tractable for <= 6 targets.
/// Equal-length orderings resolve to the lexicographically smallest target
/// sequence.
inline Path visit_all_shortest(const Grid& g, const std::set<Cell>& targets) {
  if (targets.size() > 6) throw InvalidInputError("visit-all supports at most 6 targets");
  if (targets.empty()) return bfs_shortest(g);

  std::vector<Cell> order(targets.begin(), targets.end());  // sorted: lexicographic base order
  std::sort(order.begin(), order.end());

  const auto leg_length = [&g](Cell a, Cell b) -> int {
    Grid leg = g;
    leg.start = a;
    leg.goal = b;
    const auto dist = grid_detail::bfs_distances(leg, a);
    const int d = dist[static_cast<std::size_t>(b.r) * g.cols + b.c];
    if (d < 0) throw NoPathError("target unreachable");
    return d;
  };

  std::vector<Cell> best;
  long best_len = -1;
  std::vector<Cell> perm = order;
  // std::next_permutation enumerates in lexicographic order, so the first
  // minimum found is the lexicographically smallest optimal ordering.
  do {
    long total = 0;
    Cell at = g.start;
    for (Cell t : perm) {
      total += leg_length(at, t);
      at = t;
    }
    total += leg_length(at, g.goal);
    if (best_len < 0 || total < best_len) {
      best_len = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Path path{g.start};
  Cell at = g.start;
  for (std::size_t i = 0; i <= best.size(); ++i) {
    Grid leg = g;
    leg.start = at;
    leg.goal = i < best.size() ? best[i] : g.goal;
    const Path leg_path = bfs_shortest(leg);
    path.insert(path.end(), leg_path.begin() + 1, leg_path.end());
    at = leg.goal;
  }
  return path;
}

}  // namespace vbvr::solvers
