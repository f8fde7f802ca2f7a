#pragma once

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/grid.hpp"

namespace vbvr::gen {

/// G-45: collect the prompt-specified key, then reach the matching door,
/// both legs shortest. One key and one door per color.
class KeyDoorGenerator final : public FamilyGenerator {
 public:
  KeyDoorGenerator() {
    spec_.task = TaskId{"G-45", Faculty::Spatiality};
    spec_.num_strata = 3;
    spec_.int_ranges["grid_size"] = {6, 10};
    spec_.int_ranges["num_colors"] = {2, 4};
    spec_.enum_options["target_color"] = {"Blue", "Red", "Yellow", "Purple"};
    spec_.prompt_template =
        "The scene shows a maze with a green circular agent, colored diamond-shaped keys, and "
        "colored hollow rectangular doors. Find the {color} key and then navigate to the "
        "matching {color} door, showing the complete movement process step by step.";
    spec_.rubric = {{"target_identification", 0.30},
                    {"path_validity", 0.30},
                    {"path_efficiency", 0.20},
                    {"animation_quality", 0.20}};
  }

  const FamilySpec& spec() const override { return spec_; }

  static solvers::Grid grid_from_params(const ParamAssignment& p) {
    solvers::Grid g;
    g.rows = g.cols = static_cast<int>(p.get_int("grid_size"));
    g.start = cell_from_coord(p.get_coord("start"));
    for (const auto& c : p.get_coords("walls")) g.blocked.insert(cell_from_coord(c));
    return g;
  }

  static solvers::Cell target_key_cell(const ParamAssignment& p) {
    const auto idx = static_cast<std::size_t>(p.get_int("target_index"));
    return cell_from_coord(p.get_coords("keys")[idx]);
  }
  static solvers::Cell target_door_cell(const ParamAssignment& p) {
    const auto idx = static_cast<std::size_t>(p.get_int("target_index"));
    return cell_from_coord(p.get_coords("doors")[idx]);
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    static constexpr int kSizes[3][2] = {{6, 7}, {8, 9}, {10, 10}};
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      const int n = kSizes[stratum][rng.uniform_int(0, 1)];
      const int m = static_cast<int>(rng.uniform_int(2, 4));
      const auto wall_count = rng.uniform_int(n * n / 8, n * n / 5);
      auto cells = all_cells(n);
      rng.shuffle(cells);
      solvers::Grid g;
      g.rows = g.cols = n;
      std::size_t at = 0;
      for (std::int64_t i = 0; i < wall_count; ++i) g.blocked.insert(cells[at++]);
      g.start = cells[at++];
      std::vector<solvers::Cell> keys, doors;
      for (int i = 0; i < m; ++i) keys.push_back(cells[at++]);
      for (int i = 0; i < m; ++i) doors.push_back(cells[at++]);
      const int target = static_cast<int>(rng.uniform_int(0, m - 1));

      const auto path = two_leg_path(g, g.start, keys[static_cast<std::size_t>(target)],
                                     doors[static_cast<std::size_t>(target)]);
      if (path.empty() || path.size() < 6) continue;
      // route must not brush other keys or doors, or identification
      // becomes ambiguous
      bool clean = true;
      for (const auto& c : path) {
        for (int i = 0; i < m && clean; ++i) {
          if (i == target) continue;
          clean = c != keys[static_cast<std::size_t>(i)] && c != doors[static_cast<std::size_t>(i)];
        }
        if (!clean) break;
      }
      if (!clean) continue;

      ParamAssignment p;
      p.difficulty_stratum = stratum;
      p.values["grid_size"] = static_cast<std::int64_t>(n);
      p.values["num_colors"] = static_cast<std::int64_t>(m);
      p.values["target_index"] = static_cast<std::int64_t>(target);
      p.values["target_color"] = std::string(kNamedColors[static_cast<std::size_t>(target)].name);
      p.values["start"] = coord_from_cell(g.start);
      std::vector<Coord> walls;
      for (const auto& c : g.blocked) walls.push_back(coord_from_cell(c));
      p.values["walls"] = walls;
      std::vector<Coord> kc, dc;
      for (const auto& c : keys) kc.push_back(coord_from_cell(c));
      for (const auto& c : doors) dc.push_back(coord_from_cell(c));
      p.values["keys"] = kc;
      p.values["doors"] = dc;
      return p;
    }
    throw InfeasibleError("G-45: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const auto g = grid_from_params(p);
    const auto path = two_leg_path(g, g.start, target_key_cell(p), target_door_cell(p));
    if (path.empty()) throw NoPathError("key or door unreachable");
    Trajectory t;
    t.step_semantics = "grid-move";
    for (const auto& c : path) t.states.push_back(state_from_cell(c));
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const auto g = grid_from_params(p);
    const auto geom = board_geometry(g.rows);
    const auto keys = p.get_coords("keys");
    const auto doors = p.get_coords("doors");
    render::SceneSpec scene;
    scene.elements.push_back(gridlines_element(geom));
    for (std::size_t i = 0; const auto& w : g.blocked) {
      scene.elements.push_back({"wall" + std::to_string(i++), cell_rect(geom, w, 2),
                                render::kWallGray, 1, render::ElementRole::Solid});
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto c = cell_center(geom, cell_from_coord(keys[i]));
      const double rx = geom.cell * 0.30, ry = geom.cell * 0.38;
      scene.elements.push_back({"key" + std::to_string(i),
                                render::PolyShape{{{c.x, c.y - ry}, {c.x + rx, c.y},
                                                   {c.x, c.y + ry}, {c.x - rx, c.y}}},
                                kNamedColors[i].rgb, 2, render::ElementRole::Solid});
    }
    for (std::size_t i = 0; i < doors.size(); ++i) {
      const auto r = cell_rect(geom, cell_from_coord(doors[i]), 4);
      scene.elements.push_back({"door" + std::to_string(i),
                                render::HollowRectShape{r.x, r.y, r.w, r.h, 5},
                                kNamedColors[i].rgb, 2, render::ElementRole::Solid});
    }
    const auto start_px = cell_center(geom, g.start);
    scene.elements.push_back({"agent", render::CircleShape{start_px.x, start_px.y, geom.cell * 0.30},
                              render::kGreen, 5, render::ElementRole::Annotation});
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    const auto geom = board_geometry(static_cast<int>(p.get_int("grid_size")));
    const double r = geom.cell * 0.30;
    const auto key_cell = target_key_cell(p);
    const std::string key_id = "key" + std::to_string(p.get_int("target_index"));
    std::size_t pickup_state = 0;
    for (std::size_t i = 0; i < t.states.size(); ++i) {
      if (cell_from_state(t.states[i]) == key_cell) {
        pickup_state = i;
        break;
      }
    }
    std::vector<render::Keyframe> kfs;
    for (std::size_t i = 0; i < t.states.size(); ++i) {
      const auto px = cell_center(geom, cell_from_state(t.states[i]));
      render::Keyframe kf;
      kf.poses["agent"] = render::CircleShape{px.x, px.y, r};
      if (i > pickup_state) kf.hidden.insert(key_id);
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto g = grid_from_params(s.params);
    const auto key = target_key_cell(s.params);
    const auto door = target_door_cell(s.params);
    const auto& states = s.solution.states;
    if (states.size() < 3) {
      why = "solution too short";
      return false;
    }
    if (cell_from_state(states.front()) != g.start || cell_from_state(states.back()) != door) {
      why = "solution endpoints do not match start/door";
      return false;
    }
    bool key_seen = false;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto c = cell_from_state(states[i]);
      if (!g.passable(c)) {
        why = "solution enters a wall or leaves the maze";
        return false;
      }
      if (i > 0) {
        const auto prev = cell_from_state(states[i - 1]);
        if (std::abs(prev.r - c.r) + std::abs(prev.c - c.c) != 1) {
          why = "solution step is not a 4-neighbor move";
          return false;
        }
      }
      if (c == key) key_seen = true;
      if (c == door && !key_seen && i + 1 < states.size()) {
        why = "solution reaches the door before the key";
        return false;
      }
    }
    if (!key_seen) {
      why = "solution never reaches the key";
      return false;
    }
    const auto optimal = two_leg_path(g, g.start, key, door);
    if (states.size() != optimal.size()) {
      why = "solution length differs from the optimal two-leg route";
      return false;
    }
    return true;
  }

  std::map<std::string, std::string> prompt_substitutions(const ParamAssignment& p) const override {
    return {{"color", p.get_str("target_color")}};
  }

  /// start -> key -> door with bfs_shortest legs; empty when unreachable.
  static solvers::Path two_leg_path(const solvers::Grid& g, solvers::Cell start,
                                    solvers::Cell key, solvers::Cell door) {
    try {
      solvers::Grid leg1 = g;
      leg1.start = start;
      leg1.goal = key;
      auto path = solvers::bfs_shortest(leg1);
      solvers::Grid leg2 = g;
      leg2.start = key;
      leg2.goal = door;
      const auto tail = solvers::bfs_shortest(leg2);
      path.insert(path.end(), tail.begin() + 1, tail.end());
      return path;
    } catch (const NoPathError&) {
      return {};
    }
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace vbvr::gen
