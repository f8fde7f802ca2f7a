#pragma once

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/grid.hpp"

namespace vbvr::gen {

/// G-16: visit every blue block before reaching the goal, shortest total route.
class GridVisitGenerator final : public FamilyGenerator {
 public:
  GridVisitGenerator() {
    spec_.task = TaskId{"G-16", Faculty::Spatiality};
    spec_.num_strata = 3;
    spec_.int_ranges["grid_size"] = {5, 10};
    spec_.int_ranges["num_targets"] = {2, 4};
    spec_.prompt_template =
        "The scene shows a {grid}x{grid} grid with a green start square (containing an orange "
        "circular agent), a red end square, and multiple blue rectangular blocks. Starting from "
        "the green start square, the agent can move to adjacent cells (up, down, left, right) "
        "each step. The goal is to move the agent to the red end square along the shortest path "
        "that passes through all blue blocks (the agent must visit every blue block before "
        "reaching the red end square).";
    spec_.rubric = {{"target_coverage", 0.40},
                    {"route_optimality", 0.30},
                    {"task_completion", 0.20},
                    {"motion_legality", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  static solvers::Grid grid_from_params(const ParamAssignment& p) {
    solvers::Grid g;
    g.rows = g.cols = static_cast<int>(p.get_int("grid_size"));
    g.start = cell_from_coord(p.get_coord("start"));
    g.goal = cell_from_coord(p.get_coord("goal"));
    return g;
  }

  static std::set<solvers::Cell> targets_from_params(const ParamAssignment& p) {
    std::set<solvers::Cell> t;
    for (const auto& c : p.get_coords("targets")) t.insert(cell_from_coord(c));
    return t;
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    const int num_targets = 2 + stratum;
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      const int n = static_cast<int>(rng.uniform_int(5, 10));
      auto cells = all_cells(n);
      rng.shuffle(cells);
      solvers::Grid g;
      g.rows = g.cols = n;
      g.start = cells[0];
      g.goal = cells[1];
      std::set<solvers::Cell> targets(cells.begin() + 2, cells.begin() + 2 + num_targets);
      const auto path = solvers::visit_all_shortest(g, targets);
      if (path.size() < static_cast<std::size_t>(num_targets) + 4) continue;
      ParamAssignment p;
      p.difficulty_stratum = stratum;
      p.values["grid_size"] = static_cast<std::int64_t>(n);
      p.values["num_targets"] = static_cast<std::int64_t>(num_targets);
      p.values["start"] = coord_from_cell(g.start);
      p.values["goal"] = coord_from_cell(g.goal);
      std::vector<Coord> ts;
      for (const auto& c : targets) ts.push_back(coord_from_cell(c));
      p.values["targets"] = ts;
      return p;
    }
    throw InfeasibleError("G-16: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const auto path = solvers::visit_all_shortest(grid_from_params(p), targets_from_params(p));
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
    scene.elements.push_back({"start", cell_rect(geom, g.start), render::kGreen, 1,
                              render::ElementRole::Solid});
    scene.elements.push_back({"goal", cell_rect(geom, g.goal), render::kRed, 1,
                              render::ElementRole::Solid});
    int i = 0;
    for (const auto& c : targets_from_params(p)) {
      scene.elements.push_back({"target" + std::to_string(i++), cell_rect(geom, c, 6),
                                render::kBlue, 1, render::ElementRole::Solid});
    }
    const auto start_px = cell_center(geom, g.start);
    scene.elements.push_back({"agent", render::CircleShape{start_px.x, start_px.y, geom.cell * 0.32},
                              render::kOrange, 5, render::ElementRole::Annotation});
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
    const auto targets = targets_from_params(s.params);
    const auto& states = s.solution.states;
    if (states.empty()) {
      why = "empty solution";
      return false;
    }
    if (cell_from_state(states.front()) != g.start || cell_from_state(states.back()) != g.goal) {
      why = "solution endpoints do not match start/goal";
      return false;
    }
    std::set<solvers::Cell> visited;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto c = cell_from_state(states[i]);
      if (!g.in_bounds(c)) {
        why = "solution leaves the grid";
        return false;
      }
      if (i > 0) {
        const auto prev = cell_from_state(states[i - 1]);
        if (std::abs(prev.r - c.r) + std::abs(prev.c - c.c) != 1) {
          why = "solution step is not a 4-neighbor move";
          return false;
        }
      }
      if (targets.count(c) != 0) visited.insert(c);
    }
    if (visited != targets) {
      why = "solution misses a target";
      return false;
    }
    const auto optimal = solvers::visit_all_shortest(g, targets);
    if (states.size() != optimal.size()) {
      why = "solution length differs from the optimal visit-all route";
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
