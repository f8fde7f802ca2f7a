#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "vbvr/core/error.hpp"

namespace vbvr::solvers {

/// 3x3 sliding puzzle board: values 1..8 plus 0 for the blank, row-major.
struct PuzzleState {
  std::array<std::uint8_t, 9> tiles{};

  friend bool operator==(const PuzzleState&, const PuzzleState&) = default;

  std::uint32_t pack() const {
    std::uint32_t v = 0;
    for (std::uint8_t t : tiles) v = v * 9 + t;
    return v;
  }

  int blank_index() const {
    for (int i = 0; i < 9; ++i) {
      if (tiles[static_cast<std::size_t>(i)] == 0) return i;
    }
    throw InvalidInputError("board has no blank");
  }

  bool is_permutation() const {
    std::array<bool, 9> seen{};
    for (std::uint8_t t : tiles) {
      if (t > 8 || seen[t]) return false;
      seen[t] = true;
    }
    return true;
  }
};

inline PuzzleState canonical_goal() {
  return PuzzleState{{1, 2, 3, 4, 5, 6, 7, 8, 0}};
}

/// Moves name the direction the blank travels; the tile on that side slides
/// into the blank. Enumerator order is the deterministic tie-break order.
enum class SlideMove { Up, Down, Left, Right };

inline constexpr std::array<SlideMove, 4> kSlideMoves = {SlideMove::Up, SlideMove::Down,
                                                         SlideMove::Left, SlideMove::Right};

using MoveList = std::vector<SlideMove>;

/// Applies one move, or returns false when the blank would leave the board.
inline bool apply_move(PuzzleState& s, SlideMove m) {
  const int b = s.blank_index();
  const int br = b / 3, bc = b % 3;
  int nr = br, nc = bc;
  switch (m) {
    case SlideMove::Up: nr = br - 1; break;
    case SlideMove::Down: nr = br + 1; break;
    case SlideMove::Left: nc = bc - 1; break;
    case SlideMove::Right: nc = bc + 1; break;
  }
  if (nr < 0 || nr > 2 || nc < 0 || nc > 2) return false;
  std::swap(s.tiles[static_cast<std::size_t>(b)], s.tiles[static_cast<std::size_t>(nr * 3 + nc)]);
  return true;
}

/// 3x3 solvability: inversion count over tiles 1..8 must be even.
inline bool has_even_parity(const PuzzleState& s) {
  int inversions = 0;
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      const auto a = s.tiles[static_cast<std::size_t>(i)];
      const auto b = s.tiles[static_cast<std::size_t>(j)];
      if (a != 0 && b != 0 && a > b) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

/// Optimal move list to the canonical goal via breadth-first search over the
/// reachable half of the permutation space (181,440 states). Fixed move
/// order makes the returned optimal sequence unique.
inline MoveList solve_sliding(const PuzzleState& start) {
  if (!start.is_permutation()) throw InvalidInputError("board is not a permutation of 0..8");
  if (!has_even_parity(start)) throw UnsolvableError("odd-parity board cannot reach the goal");
  const PuzzleState goal = canonical_goal();
  if (start == goal) return {};

  struct Visit {
    std::uint32_t parent;
    std::uint8_t move;
  };
  std::unordered_map<std::uint32_t, Visit> visited;
  visited.reserve(1 << 16);
  std::deque<PuzzleState> queue{start};
  visited[start.pack()] = {start.pack(), 0xff};

  while (!queue.empty()) {
    const PuzzleState cur = queue.front();
    queue.pop_front();
    for (std::size_t mi = 0; mi < kSlideMoves.size(); ++mi) {
      PuzzleState next = cur;
      if (!apply_move(next, kSlideMoves[mi])) continue;
      const std::uint32_t key = next.pack();
      if (visited.count(key) != 0) continue;
      visited[key] = {cur.pack(), static_cast<std::uint8_t>(mi)};
      if (next == goal) {
        MoveList moves;
        std::uint32_t at = key;
        while (visited[at].move != 0xff) {
          moves.push_back(kSlideMoves[visited[at].move]);
          at = visited[at].parent;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
      }
      queue.push_back(next);
    }
  }
  throw UnsolvableError("goal not reachable");  // cannot happen for even parity
}

}  // namespace vbvr::solvers
