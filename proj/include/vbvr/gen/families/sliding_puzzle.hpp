#pragma once

#include <deque>
#include <mutex>
#include <unordered_map>

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/sliding.hpp"

namespace vbvr::gen {

/// O-47: solve a 3x3 sliding puzzle to the canonical goal in exactly N moves,
/// where N is the instance's optimal solution length.
class SlidingPuzzleGenerator final : public FamilyGenerator {
 public:
  SlidingPuzzleGenerator() {
    spec_.task = TaskId{"O-47", Faculty::Abstraction};
    spec_.num_strata = 3;
    spec_.int_ranges["target_moves"] = {8, 19};
    spec_.int_ranges["color_offset"] = {0, 7};
    spec_.int_ranges["jitter_x"] = {-6, 6};
    spec_.int_ranges["jitter_y"] = {-6, 6};
    spec_.prompt_template =
        "Complete this sliding puzzle. The goal is to arrange the numbered tiles in grid order "
        "(filling each row from left to right, with rows from top to bottom), with the empty "
        "space at the bottom-right corner. Rules: Only tiles adjacent to the empty space can be "
        "moved. Slide one tile per move into the empty space. Complete in exactly {target_moves} "
        "moves. Do not make extra moves. Keep the camera view fixed and maintain the grid "
        "structure unchanged.";
    spec_.rubric = {{"goal_state_accuracy", 0.40},
                    {"move_count_compliance", 0.30},
                    {"move_legality", 0.20},
                    {"layout_fidelity", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  struct PuzzleGeometry {
    int origin_x = 0, origin_y = 0, cell = 140, inset = 5, glyph_scale = 10;
  };

  static PuzzleGeometry puzzle_geometry(const ParamAssignment& p) {
    PuzzleGeometry g;
    g.origin_x = (render::kCanvasSize - 3 * g.cell) / 2 + static_cast<int>(p.get_int("jitter_x"));
    g.origin_y = (render::kCanvasSize - 3 * g.cell) / 2 + static_cast<int>(p.get_int("jitter_y"));
    return g;
  }

  static solvers::PuzzleState board_from_string(const std::string& s) {
    solvers::PuzzleState b;
    for (int i = 0; i < 9; ++i) b.tiles[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s[static_cast<std::size_t>(i)] - '0');
    return b;
  }

  static std::string board_to_string(const solvers::PuzzleState& b) {
    std::string s(9, '0');
    for (int i = 0; i < 9; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + b.tiles[static_cast<std::size_t>(i)]);
    return s;
  }

  static render::Rgb tile_color(int tile, int color_offset) {
    return render::kFillPalette[static_cast<std::size_t>((tile - 1 + color_offset) % 8)];
  }

  /// All boards whose optimal distance to the goal is exactly `depth`,
  /// from one cached breadth-first sweep of the reachable space.
  static const std::vector<solvers::PuzzleState>& depth_class(int depth) {
    static std::vector<std::vector<solvers::PuzzleState>> classes;
    static std::once_flag once;
    std::call_once(once, [] {
      classes.resize(32);
      std::unordered_map<std::uint32_t, int> dist;
      dist.reserve(200000);
      std::deque<solvers::PuzzleState> q{solvers::canonical_goal()};
      dist[solvers::canonical_goal().pack()] = 0;
      classes[0].push_back(solvers::canonical_goal());
      while (!q.empty()) {
        const auto cur = q.front();
        q.pop_front();
        const int d = dist[cur.pack()];
        for (auto m : solvers::kSlideMoves) {
          auto next = cur;
          if (!solvers::apply_move(next, m)) continue;
          if (dist.count(next.pack()) != 0) continue;
          dist[next.pack()] = d + 1;
          classes[static_cast<std::size_t>(d + 1)].push_back(next);
          q.push_back(next);
        }
      }
    });
    return classes[static_cast<std::size_t>(depth)];
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    static constexpr int kMoveRange[3][2] = {{8, 11}, {12, 15}, {16, 19}};
    const int n = static_cast<int>(rng.uniform_int(kMoveRange[stratum][0], kMoveRange[stratum][1]));
    const auto& cls = depth_class(n);
    const auto& board = cls[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(cls.size()) - 1))];
    ParamAssignment p;
    p.difficulty_stratum = stratum;
    p.values["board"] = board_to_string(board);
    p.values["target_moves"] = static_cast<std::int64_t>(n);
    p.values["color_offset"] = rng.uniform_int(0, 7);
    p.values["jitter_x"] = rng.uniform_int(-6, 6);
    p.values["jitter_y"] = rng.uniform_int(-6, 6);
    return p;
  }

  Trajectory solve(const ParamAssignment& p) const override {
    auto board = board_from_string(p.get_str("board"));
    const auto moves = solvers::solve_sliding(board);
    Trajectory t;
    t.step_semantics = "tile-slide";
    const auto snapshot = [](const solvers::PuzzleState& b) {
      Json st = Json::array();
      for (auto v : b.tiles) st.push_back(static_cast<int>(v));
      return st;
    };
    t.states.push_back(snapshot(board));
    for (auto m : moves) {
      solvers::apply_move(board, m);
      t.states.push_back(snapshot(board));
    }
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const auto geom = puzzle_geometry(p);
    const auto board = board_from_string(p.get_str("board"));
    const int offset = static_cast<int>(p.get_int("color_offset"));
    render::SceneSpec scene;
    scene.elements.push_back({"frame",
                              render::GridLinesShape{static_cast<double>(geom.origin_x),
                                                     static_cast<double>(geom.origin_y), 3, 3,
                                                     geom.cell, 2},
                              render::kBlack, 0, render::ElementRole::Backdrop});
    for (int i = 0; i < 9; ++i) {
      const int tile = board.tiles[static_cast<std::size_t>(i)];
      if (tile == 0) continue;
      add_tile(scene, geom, tile, i / 3, i % 3, offset);
    }
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    const auto geom = puzzle_geometry(p);
    std::vector<render::Keyframe> kfs;
    for (const auto& state : t.states) {
      render::Keyframe kf;
      for (int i = 0; i < 9; ++i) {
        const int tile = state[static_cast<std::size_t>(i)].get<int>();
        if (tile == 0) continue;
        kf.poses["tile" + std::to_string(tile)] = tile_rect(geom, i / 3, i % 3);
        kf.poses["label" + std::to_string(tile)] = label_text(geom, tile, i / 3, i % 3);
      }
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto& states = s.solution.states;
    const auto initial = board_from_string(s.params.get_str("board"));
    const auto want_moves = s.params.get_int("target_moves");
    if (states.empty()) {
      why = "empty solution";
      return false;
    }
    auto read_board = [](const Json& st) {
      solvers::PuzzleState b;
      for (int i = 0; i < 9; ++i) b.tiles[static_cast<std::size_t>(i)] = st[static_cast<std::size_t>(i)].get<std::uint8_t>();
      return b;
    };
    if (read_board(states.front()) != initial) {
      why = "first state is not the initial board";
      return false;
    }
    if (read_board(states.back()) != solvers::canonical_goal()) {
      why = "final state is not the canonical goal";
      return false;
    }
    for (std::size_t i = 1; i < states.size(); ++i) {
      const auto prev = read_board(states[i - 1]);
      const auto cur = read_board(states[i]);
      bool legal = false;
      for (auto m : solvers::kSlideMoves) {
        auto next = prev;
        if (solvers::apply_move(next, m) && next == cur) {
          legal = true;
          break;
        }
      }
      if (!legal) {
        why = "transition is not a single legal slide";
        return false;
      }
    }
    if (static_cast<std::int64_t>(states.size()) - 1 != want_moves) {
      why = "move count differs from target_moves";
      return false;
    }
    if (static_cast<std::int64_t>(solvers::solve_sliding(initial).size()) != want_moves) {
      why = "target_moves is not the optimal length";
      return false;
    }
    return true;
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  static render::RectShape tile_rect(const PuzzleGeometry& g, int row, int col) {
    return render::RectShape{static_cast<double>(g.origin_x + col * g.cell + g.inset),
                             static_cast<double>(g.origin_y + row * g.cell + g.inset),
                             static_cast<double>(g.cell - 2 * g.inset),
                             static_cast<double>(g.cell - 2 * g.inset)};
  }

  static render::TextShape label_text(const PuzzleGeometry& g, int tile, int row, int col) {
    const int w = render::text_width(std::to_string(tile), g.glyph_scale);
    const int h = render::kGlyphHeight * g.glyph_scale;
    return render::TextShape{g.origin_x + col * g.cell + (g.cell - w) / 2.0,
                             g.origin_y + row * g.cell + (g.cell - h) / 2.0, g.glyph_scale,
                             std::to_string(tile)};
  }

  static void add_tile(render::SceneSpec& scene, const PuzzleGeometry& g, int tile, int row,
                       int col, int color_offset) {
    scene.elements.push_back({"tile" + std::to_string(tile), tile_rect(g, row, col),
                              tile_color(tile, color_offset), 1, render::ElementRole::Solid});
    scene.elements.push_back({"label" + std::to_string(tile), label_text(g, tile, row, col),
                              render::kBlack, 2, render::ElementRole::Annotation});
  }

  FamilySpec spec_;
};

}  // namespace vbvr::gen
