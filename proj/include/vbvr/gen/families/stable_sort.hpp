#pragma once

#include <array>

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/sort_layout.hpp"

namespace vbvr::gen {

/// G-3: group 2 shape types x 3 sizes into one sorted horizontal line while
/// preserving every attribute. Objects move one at a time, left slot first.
class StableSortGenerator final : public FamilyGenerator {
 public:
  static constexpr const char* kShapeKinds[4] = {"circle", "square", "triangle", "diamond"};

  StableSortGenerator() {
    spec_.task = TaskId{"G-3", Faculty::Perception};
    spec_.num_strata = 3;
    spec_.prompt_template =
        "The scene contains two types of shapes, each type has three shapes of different sizes "
        "arranged randomly. Keep all shapes unchanged in appearance (type, size, and color). "
        "Only rearrange their positions: first group the shapes by type, then within each group, "
        "sort the shapes from smallest to largest (left to right), and arrange all shapes in a "
        "single horizontal line from left to right.";
    spec_.rubric = {{"classification", 0.30},
                    {"ordering", 0.30},
                    {"object_fidelity", 0.30},
                    {"layout", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  static std::vector<solvers::SortObject> objects_from_params(const ParamAssignment& p) {
    std::vector<solvers::SortObject> objs;
    const auto positions = p.get_coords("positions");
    for (std::size_t i = 0; i < positions.size(); ++i) {
      solvers::SortObject o;
      o.type = p.get_str("type" + std::to_string(i));
      o.size = static_cast<double>(p.get_int("size" + std::to_string(i)));
      o.color = p.get_str("color" + std::to_string(i));
      o.x = positions[i].x;
      o.y = positions[i].y;
      objs.push_back(std::move(o));
    }
    return objs;
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    // strata tighten the spread between sizes, which makes ordering harder
    static constexpr int kSizeSets[3][5] = {
        {26, 34, 42, 50, 58}, {28, 34, 40, 46, 52}, {30, 34, 38, 42, 46}};
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      std::vector<int> kinds{0, 1, 2, 3};
      rng.shuffle(kinds);
      std::vector<int> palette_idx{0, 1, 2, 3, 4, 5, 6, 7};
      rng.shuffle(palette_idx);

      std::vector<solvers::SortObject> objs;
      for (int type_i = 0; type_i < 2; ++type_i) {
        std::vector<int> sizes(std::begin(kSizeSets[stratum]), std::end(kSizeSets[stratum]));
        rng.shuffle(sizes);
        for (int j = 0; j < 3; ++j) {
          solvers::SortObject o;
          o.type = kShapeKinds[kinds[static_cast<std::size_t>(type_i)]];
          o.size = sizes[static_cast<std::size_t>(j)];
          o.color = kNamedColors[static_cast<std::size_t>(palette_idx[static_cast<std::size_t>(type_i * 3 + j)])].name;
          objs.push_back(std::move(o));
        }
      }
      bool placed = true;
      for (auto& o : objs) {
        bool ok = false;
        for (int tries = 0; tries < 60 && !ok; ++tries) {
          o.x = static_cast<double>(rng.uniform_int(70, 442));
          o.y = static_cast<double>(rng.uniform_int(70, 442));
          ok = true;
          for (const auto& other : objs) {
            if (&other == &o) break;
            const double dx = other.x - o.x, dy = other.y - o.y;
            const double min_d = (other.size + o.size) / 2 + 16;
            if (dx * dx + dy * dy < min_d * min_d) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) {
          placed = false;
          break;
        }
      }
      if (!placed) continue;
      // leftmost instances of the two types must differ so group order is
      // well defined without ties
      double left0 = 1e9, left1 = 1e9;
      for (const auto& o : objs) {
        double& slot = o.type == objs[0].type ? left0 : left1;
        slot = std::min(slot, o.x);
      }
      if (left0 == left1) continue;

      ParamAssignment p;
      p.difficulty_stratum = stratum;
      std::vector<Coord> positions;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        p.values["type" + std::to_string(i)] = objs[i].type;
        p.values["size" + std::to_string(i)] = static_cast<std::int64_t>(objs[i].size);
        p.values["color" + std::to_string(i)] = objs[i].color;
        positions.push_back(Coord{objs[i].x, objs[i].y});
      }
      p.values["positions"] = positions;
      return p;
    }
    throw InfeasibleError("G-3: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    auto objs = objects_from_params(p);
    const auto targets = solvers::stable_sort_layout(objs, render::kCanvasSize);
    // move one object per step, target slots left to right
    std::vector<std::size_t> order(objs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&targets](std::size_t a, std::size_t b) { return targets[a].x < targets[b].x; });

    Trajectory t;
    t.step_semantics = "object-move";
    std::vector<Coord> cur;
    for (const auto& o : objs) cur.push_back(Coord{o.x, o.y});
    const auto snapshot = [&cur]() {
      Json st = Json::array();
      for (const auto& c : cur) st.push_back(Json::array({c.x, c.y}));
      return st;
    };
    t.states.push_back(snapshot());
    for (std::size_t slot : order) {
      cur[slot] = Coord{targets[slot].x, targets[slot].y};
      t.states.push_back(snapshot());
    }
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const auto objs = objects_from_params(p);
    render::SceneSpec scene;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      scene.elements.push_back({"obj" + std::to_string(i),
                                object_shape(objs[i].type, objs[i].x, objs[i].y, objs[i].size),
                                color_by_name(objs[i].color), 1, render::ElementRole::Solid});
    }
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    const auto objs = objects_from_params(p);
    std::vector<render::Keyframe> kfs;
    for (const auto& state : t.states) {
      render::Keyframe kf;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        kf.poses["obj" + std::to_string(i)] =
            object_shape(objs[i].type, state[i][0].get<double>(), state[i][1].get<double>(),
                          objs[i].size);
      }
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto objs = objects_from_params(s.params);
    const auto targets = solvers::stable_sort_layout(objs, render::kCanvasSize);
    const auto& states = s.solution.states;
    if (states.size() != objs.size() + 1) {
      why = "expected one move per object";
      return false;
    }
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (states[0][i][0].get<double>() != objs[i].x || states[0][i][1].get<double>() != objs[i].y) {
        why = "first state does not match the initial layout";
        return false;
      }
    }
    for (std::size_t step = 1; step < states.size(); ++step) {
      int moved = 0;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        if (states[step][i] != states[step - 1][i]) ++moved;
      }
      if (moved != 1) {
        why = "each transition must move exactly one object";
        return false;
      }
    }
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (states.back()[i][0].get<double>() != targets[i].x ||
          states.back()[i][1].get<double>() != targets[i].y) {
        why = "final state does not match the sorted layout";
        return false;
      }
    }
    return true;
  }

  static render::Shape object_shape(const std::string& type, double x, double y, double size) {
    const double h = size / 2;
    if (type == "circle") return render::CircleShape{x, y, h};
    if (type == "square") return render::RectShape{x - h, y - h, size, size};
    if (type == "triangle") {
      return render::PolyShape{{{x, y - h}, {x + h, y + h}, {x - h, y + h}}};
    }
    return render::PolyShape{{{x, y - h}, {x + h, y}, {x, y + h}, {x - h, y}}};  // diamond
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace vbvr::gen
