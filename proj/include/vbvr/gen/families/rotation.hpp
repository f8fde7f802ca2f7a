#pragma once

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"

namespace vbvr::gen {

// Fixed-point-of-truth trig for 15-degree multiples. libm sin/cos is not
// bit-portable, so the rotation family never calls it.
inline constexpr double kCos15[24] = {
    1.0, 0.9659258262890683, 0.8660254037844387, 0.7071067811865476, 0.5000000000000001,
    0.25881904510252074, 6.123233995736766e-17, -0.25881904510252085, -0.4999999999999998,
    -0.7071067811865475, -0.8660254037844387, -0.9659258262890682, -1.0, -0.9659258262890683,
    -0.8660254037844386, -0.7071067811865477, -0.5000000000000004, -0.25881904510252063,
    -1.8369701987210297e-16, 0.2588190451025203, 0.5000000000000001, 0.7071067811865474,
    0.8660254037844384, 0.9659258262890683};
inline constexpr double kSin15[24] = {
    0.0, 0.25881904510252074, 0.49999999999999994, 0.7071067811865475, 0.8660254037844386,
    0.9659258262890683, 1.0, 0.9659258262890683, 0.8660254037844387, 0.7071067811865476,
    0.49999999999999994, 0.258819045102521, 1.2246467991473532e-16, -0.2588190451025208,
    -0.5000000000000001, -0.7071067811865475, -0.8660254037844384, -0.9659258262890683, -1.0,
    -0.9659258262890684, -0.8660254037844386, -0.7071067811865477, -0.5000000000000004,
    -0.2588190451025207};

inline render::P rotate15(render::P v, int degrees) {
  const int idx = ((degrees % 360) + 360) % 360 / 15;
  const double c = kCos15[static_cast<std::size_t>(idx)];
  const double s = kSin15[static_cast<std::size_t>(idx)];
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

/// O-85: rotate a polygon by a 15-degree-multiple angle about a drawn pivot
/// marker, preserving shape, size, and color. States are signed angles; the
/// animation interpolates vertex positions between 15-degree keyframes.
class RotationGenerator final : public FamilyGenerator {
 public:
  static constexpr const char* kShapes[4] = {"wedge", "ell", "arrow", "tee"};

  RotationGenerator() {
    spec_.task = TaskId{"O-85", Faculty::Transformation};
    spec_.num_strata = 3;
    spec_.int_ranges["angle"] = {45, 180};
    spec_.int_ranges["size"] = {70, 110};
    spec_.int_ranges["offset"] = {60, 100};
    spec_.enum_options["shape"] = {"wedge", "ell", "arrow", "tee"};
    spec_.enum_options["direction"] = {"clockwise", "counterclockwise"};
    spec_.enum_options["color"] = {"Red", "Green", "Blue", "Orange", "Purple", "Cyan"};
    spec_.prompt_template =
        "The scene shows a {color_word} shape and a black pivot dot. Rotate the shape {angle} "
        "degrees {direction} around the pivot dot, keeping its shape, size, and color unchanged, "
        "and show the rotation as one continuous motion.";
    spec_.rubric = {{"rotation_accuracy", 0.40},
                    {"pivot_stability", 0.30},
                    {"object_fidelity", 0.20},
                    {"animation_smoothness", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  static std::vector<render::P> base_vertices(const std::string& shape, double s) {
    if (shape == "wedge") {
      return {{-0.5 * s, -0.5 * s}, {0.5 * s, 0.5 * s}, {-0.5 * s, 0.5 * s}};
    }
    if (shape == "ell") {
      return {{-0.3 * s, -0.5 * s}, {0.1 * s, -0.5 * s}, {0.1 * s, 0.1 * s},
              {0.5 * s, 0.1 * s},   {0.5 * s, 0.5 * s},  {-0.3 * s, 0.5 * s}};
    }
    if (shape == "arrow") {
      return {{-0.5 * s, -0.18 * s}, {0.08 * s, -0.18 * s}, {0.08 * s, -0.44 * s},
              {0.5 * s, 0.0},        {0.08 * s, 0.44 * s},  {0.08 * s, 0.18 * s},
              {-0.5 * s, 0.18 * s}};
    }
    return {{-0.5 * s, -0.5 * s}, {0.5 * s, -0.5 * s},  {0.5 * s, -0.14 * s},
            {0.14 * s, -0.14 * s}, {0.14 * s, 0.5 * s},  {-0.14 * s, 0.5 * s},
            {-0.14 * s, -0.14 * s}, {-0.5 * s, -0.14 * s}};  // tee
  }

  static render::P pivot_point(const ParamAssignment& p) {
    const auto c = p.get_coord("pivot");
    return {c.x, c.y};
  }

  /// Object vertices at a given signed rotation angle from the initial pose.
  static std::vector<render::P> vertices_at(const ParamAssignment& p, int angle_deg) {
    const auto pivot = pivot_point(p);
    const auto center0 = p.get_coord("object_center");
    auto pts = base_vertices(p.get_str("shape"), static_cast<double>(p.get_int("size")));
    for (auto& v : pts) {
      const render::P rel{center0.x + v.x - pivot.x, center0.y + v.y - pivot.y};
      const auto rot = rotate15(rel, angle_deg);
      v = {pivot.x + rot.x, pivot.y + rot.y};
    }
    return pts;
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    static constexpr int kAngles[3][3] = {{45, 60, 75}, {90, 105, 120}, {135, 150, 165}};
    static constexpr int kCompass[8][2] = {{1, 0},  {1, 1},  {0, 1},  {-1, 1},
                                           {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      ParamAssignment p;
      p.difficulty_stratum = stratum;
      int angle = kAngles[stratum][rng.uniform_int(0, 2)];
      if (stratum == 2 && rng.chance(0.25)) angle = 180;
      p.values["angle"] = static_cast<std::int64_t>(angle);
      p.values["direction"] = std::string(rng.chance(0.5) ? "clockwise" : "counterclockwise");
      p.values["shape"] = std::string(kShapes[rng.uniform_int(0, 3)]);
      p.values["color"] = std::string(
          spec_.enum_options.at("color")[static_cast<std::size_t>(rng.uniform_int(0, 5))]);
      p.values["size"] = rng.uniform_int(70, 110);
      p.values["offset"] = rng.uniform_int(60, 100);
      const double px = 256 + static_cast<double>(rng.uniform_int(-40, 40));
      const double py = 256 + static_cast<double>(rng.uniform_int(-40, 40));
      p.values["pivot"] = Coord{px, py};
      const auto& dir = kCompass[rng.uniform_int(0, 7)];
      const double off = static_cast<double>(p.get_int("offset"));
      const double diag = dir[0] != 0 && dir[1] != 0 ? 0.7071067811865476 : 1.0;
      p.values["object_center"] = Coord{px + dir[0] * off * diag, py + dir[1] * off * diag};

      // every 15-degree keyframe must stay on canvas
      bool ok = true;
      const int sign = p.get_str("direction") == "clockwise" ? 1 : -1;
      for (int a = 0; a <= angle && ok; a += 15) {
        for (const auto& v : vertices_at(p, sign * a)) {
          if (v.x < 12 || v.x > render::kCanvasSize - 12 || v.y < 12 ||
              v.y > render::kCanvasSize - 12) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return p;
    }
    throw InfeasibleError("O-85: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const int angle = static_cast<int>(p.get_int("angle"));
    const int sign = p.get_str("direction") == "clockwise" ? 1 : -1;
    Trajectory t;
    t.step_semantics = "continuous-pose";
    for (int a = 0; a <= angle; a += 15) t.states.push_back(Json(sign * a));
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    render::SceneSpec scene;
    scene.elements.push_back({"object", render::PolyShape{vertices_at(p, 0)},
                              color_by_name(p.get_str("color")), 1, render::ElementRole::Solid});
    const auto pivot = pivot_point(p);
    scene.elements.push_back({"pivot", render::CircleShape{pivot.x, pivot.y, 7}, render::kBlack,
                              5, render::ElementRole::Annotation});
    scene.elements.push_back({"pivot_center", render::CircleShape{pivot.x, pivot.y, 2},
                              render::kWhite, 6, render::ElementRole::Annotation});
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    std::vector<render::Keyframe> kfs;
    for (const auto& state : t.states) {
      render::Keyframe kf;
      kf.poses["object"] = render::PolyShape{vertices_at(p, state.get<int>())};
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto& states = s.solution.states;
    const int angle = static_cast<int>(s.params.get_int("angle"));
    const int sign = s.params.get_str("direction") == "clockwise" ? 1 : -1;
    if (static_cast<int>(states.size()) != angle / 15 + 1) {
      why = "expected one state per 15-degree increment";
      return false;
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].get<int>() != sign * static_cast<int>(i) * 15) {
        why = "angles must advance by 15 degrees toward the target";
        return false;
      }
    }
    return true;
  }

  std::map<std::string, std::string> prompt_substitutions(const ParamAssignment& p) const override {
    return {{"color_word", lowercase(p.get_str("color"))}};
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace vbvr::gen
