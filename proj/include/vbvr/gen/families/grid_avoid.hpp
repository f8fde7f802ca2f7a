#pragma once

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/grid.hpp"

namespace vbvr::gen {

/// G-15: navigate an n x n grid start -> goal on the shortest route while
/// never entering obstacle cells.
class GridAvoidGenerator final : public FamilyGenerator {
 public:
  GridAvoidGenerator() {
    spec_.task = TaskId{"G-15", Faculty::Spatiality};
    spec_.num_strata = 3;
    spec_.int_ranges["grid_size"] = {5, 10};
    spec_.int_ranges["num_obstacles"] = {3, 15};
    spec_.prompt_template =
        "The scene shows a {grid}x{grid} grid with a blue start square (containing a yellow "
        "circular agent), a red end square, and multiple black X marks indicating obstacles. "
        "Starting from the blue start square, the agent can move to adjacent cells (up, down, "
        "left, right) each step. The goal is to move the agent to the red end square along the "
        "shortest path without entering any cells marked with black X obstacles.";
    spec_.rubric = {{"obstacle_avoidance", 0.40},
                    {"path_optimality", 0.30},
                    {"motion_compliance", 0.20},
                    {"task_completion", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  static solvers::Grid grid_from_params(const ParamAssignment& p) {
    solvers::Grid g;
    g.rows = g.cols = static_cast<int>(p.get_int("grid_size"));
    g.start = cell_from_coord(p.get_coord("start"));
    g.goal = cell_from_coord(p.get_coord("goal"));
    for (const auto& c : p.get_coords("obstacles")) g.blocked.insert(cell_from_coord(c));
    return g;
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    static constexpr int kSizes[3][2] = {{5, 6}, {7, 8}, {9, 10}};
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      const int n = kSizes[stratum][rng.uniform_int(0, 1)];
      const auto k = rng.uniform_int(3, std::min<std::int64_t>(15, n * n / 4));
      auto cells = all_cells(n);
      rng.shuffle(cells);
      solvers::Grid g;
      g.rows = g.cols = n;
      for (std::int64_t i = 0; i < k; ++i) g.blocked.insert(cells[static_cast<std::size_t>(i)]);
      g.start = cells[static_cast<std::size_t>(k)];
      g.goal = cells[static_cast<std::size_t>(k + 1)];
      try {
        const auto path = solvers::bfs_shortest(g);
        if (path.size() < 4) continue;  // at least 3 moves keeps instances non-trivial
      } catch (const NoPathError&) {
        continue;
      }
      ParamAssignment p;
      p.difficulty_stratum = stratum;
      p.values["grid_size"] = static_cast<std::int64_t>(n);
      p.values["num_obstacles"] = k;
      p.values["start"] = coord_from_cell(g.start);
      p.values["goal"] = coord_from_cell(g.goal);
      std::vector<Coord> obs;
      for (const auto& c : g.blocked) obs.push_back(coord_from_cell(c));
      p.values["obstacles"] = obs;
      return p;
    }
    throw InfeasibleError("G-15: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const auto path = solvers::bfs_shortest(grid_from_params(p));
    Trajectory t;
    t.step_semantics = "grid-move";
    for (const auto& c : path) t.states.push_back(state_from_cell(c));
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const auto g = grid_from_params(p);
    const auto geom = board_geometry(g.rows);
    render::SceneSpec scene;
    scene.elements.push_back(gridlines_element(geom));
    scene.elements.push_back({"start", cell_rect(geom, g.start), render::kBlue, 1,
                              render::ElementRole::Solid});
    scene.elements.push_back({"goal", cell_rect(geom, g.goal), render::kRed, 1,
                              render::ElementRole::Solid});
    int i = 0;
    for (const auto& c : g.blocked) {
      const auto center = cell_center(geom, c);
      scene.elements.push_back({"obs" + std::to_string(i++),
                                render::CrossShape{center.x, center.y, geom.cell * 0.30, 3},
                                render::kBlack, 1, render::ElementRole::Solid});
    }
    const auto start_px = cell_center(geom, g.start);
    scene.elements.push_back({"agent", render::CircleShape{start_px.x, start_px.y, geom.cell * 0.32},
                              render::kYellow, 5, render::ElementRole::Annotation});
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    const auto geom = board_geometry(static_cast<int>(p.get_int("grid_size")));
    const double r = geom.cell * 0.32;
    std::vector<render::Keyframe> kfs;
    for (const auto& state : t.states) {
      const auto px = cell_center(geom, cell_from_state(state));
      render::Keyframe kf;
      kf.poses["agent"] = render::CircleShape{px.x, px.y, r};
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto g = grid_from_params(s.params);
    const auto& states = s.solution.states;
    if (states.empty()) {
      why = "empty solution";
      return false;
    }
    if (cell_from_state(states.front()) != g.start || cell_from_state(states.back()) != g.goal) {
      why = "solution endpoints do not match start/goal";
      return false;
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto c = cell_from_state(states[i]);
      if (!g.passable(c)) {
        why = "solution enters a blocked or out-of-grid cell";
        return false;
      }
      if (i > 0) {
        const auto prev = cell_from_state(states[i - 1]);
        if (std::abs(prev.r - c.r) + std::abs(prev.c - c.c) != 1) {
          why = "solution step is not a 4-neighbor move";
          return false;
        }
      }
    }
    const auto optimal = solvers::bfs_shortest(g);
    if (states.size() != optimal.size()) {
      why = "solution length differs from the shortest path";
      return false;
    }
    return true;
  }

  std::map<std::string, std::string> prompt_substitutions(const ParamAssignment& p) const override {
    return {{"grid", std::to_string(p.get_int("grid_size"))}};
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace vbvr::gen
