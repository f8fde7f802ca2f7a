#pragma once

#include <cmath>

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/bounce.hpp"

namespace vbvr::gen {

inline constexpr double kBallRadius = 12.0;
inline constexpr int kBoxMargin = 10;     // canvas edge to wall outer face
inline constexpr int kWallThickness = 8;  // drawn wall

/// G-35: launch a ball that reflects elastically off the box walls exactly k
/// times and then hits the ring target. The target is placed with the
/// mirror-image construction, so every emitted instance is solvable by
/// construction. Difficulty stratum = required bounce count.
class BounceGenerator final : public FamilyGenerator {
 public:
  BounceGenerator() {
    spec_.task = TaskId{"G-35", Faculty::Knowledge};
    spec_.num_strata = 3;
    spec_.int_ranges["bounces"] = {0, 2};
    spec_.int_ranges["target_radius"] = {22, 30};
    spec_.int_ranges["steps"] = {8, 26};
    spec_.prompt_template =
        "The scene shows a rectangular box with solid black walls, a blue ball, and a red ring "
        "target. The black arrow shows the ball's initial direction of motion. The ball travels "
        "in straight lines and reflects elastically off the walls without losing speed. Show the "
        "ball moving from its starting position, bouncing off the walls exactly {bounces} "
        "time(s), and stopping when it reaches the target ring.";
    spec_.rubric = {{"target_hit", 0.40},
                    {"bounce_count", 0.30},
                    {"physics_plausibility", 0.20},
                    {"animation_quality", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  /// Reflection planes: inner wall faces inset by the ball radius, so the
  /// drawn ball touches the wall at contact.
  static solvers::BounceWorld world_from_params(const ParamAssignment& p) {
    solvers::BounceWorld w;
    const double inner = kBoxMargin + kWallThickness;
    w.min_x = w.min_y = inner + kBallRadius;
    w.max_x = w.max_y = render::kCanvasSize - inner - kBallRadius;
    const auto ball = p.get_coord("ball");
    const auto vel = p.get_coord("velocity");
    const auto target = p.get_coord("target");
    w.ball = {ball.x, ball.y};
    w.velocity = {vel.x, vel.y};
    w.target = {target.x, target.y};
    w.target_radius = static_cast<double>(p.get_int("target_radius"));
    return w;
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    const int bounces = stratum;
    solvers::BounceWorld box;
    const double inner = kBoxMargin + kWallThickness;
    box.min_x = box.min_y = inner + kBallRadius;
    box.max_x = box.max_y = render::kCanvasSize - inner - kBallRadius;

    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      solvers::BounceWorld w = box;
      const double margin = 70;
      w.ball = {static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(w.min_x + margin),
                                                    static_cast<std::int64_t>(w.max_x - margin))),
                static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(w.min_y + margin),
                                                    static_cast<std::int64_t>(w.max_y - margin)))};
      w.target = {static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(w.min_x + margin),
                                                      static_cast<std::int64_t>(w.max_x - margin))),
                  static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(w.min_y + margin),
                                                      static_cast<std::int64_t>(w.max_y - margin)))};
      w.target_radius = static_cast<double>(rng.uniform_int(22, 30));

      std::vector<solvers::MirrorWall> walls;
      int prev = -1;
      for (int i = 0; i < bounces; ++i) {
        int pick;
        do {
          pick = static_cast<int>(rng.uniform_int(0, 3));
        } while (pick == prev);
        prev = pick;
        walls.push_back({pick / 2, pick % 2 == 0});
      }
      const auto aim = solvers::mirror_aim_point(w, walls);
      const solvers::Vec2 dir = aim - w.ball;
      const double dist = dir.norm();
      if (dist < 240) continue;
      const int steps = static_cast<int>(std::clamp<long long>(std::llround(dist / 28.0), 8, 26));
      w.velocity = dir * (1.0 / steps);
      if (w.velocity.norm() < 14) continue;

      const auto sim = solvers::simulate_bounce(w, steps + 2);
      if (!sim.hit || static_cast<int>(sim.reflections.size()) != bounces) continue;
      // ball and target must stay visually separate at launch
      const solvers::Vec2 gap = w.target - w.ball;
      if (gap.norm() < w.target_radius + kBallRadius + 60) continue;

      ParamAssignment p;
      p.difficulty_stratum = stratum;
      p.values["bounces"] = static_cast<std::int64_t>(bounces);
      p.values["ball"] = Coord{w.ball.x, w.ball.y};
      p.values["velocity"] = Coord{w.velocity.x, w.velocity.y};
      p.values["target"] = Coord{w.target.x, w.target.y};
      p.values["target_radius"] = static_cast<std::int64_t>(w.target_radius);
      p.values["steps"] = static_cast<std::int64_t>(steps);
      return p;
    }
    throw InfeasibleError("G-35: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const auto w = world_from_params(p);
    const auto sim = solvers::simulate_bounce(w, static_cast<int>(p.get_int("steps")) + 2);
    if (!sim.hit) throw NoPathError("ball never reaches the target");
    Trajectory t;
    t.step_semantics = "continuous-pose";
    for (const auto& s : sim.states) t.states.push_back(Json::array({s.x, s.y}));
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const auto w = world_from_params(p);
    render::SceneSpec scene;
    const double side = render::kCanvasSize - 2.0 * kBoxMargin;
    scene.elements.push_back({"box",
                              render::HollowRectShape{static_cast<double>(kBoxMargin),
                                                      static_cast<double>(kBoxMargin), side, side,
                                                      kWallThickness},
                              render::kBlack, 0, render::ElementRole::Backdrop});
    scene.elements.push_back({"target",
                              render::RingShape{w.target.x, w.target.y, w.target_radius + 6,
                                                w.target_radius - 2},
                              render::kRed, 1, render::ElementRole::Solid});
    scene.elements.push_back({"ball", render::CircleShape{w.ball.x, w.ball.y, kBallRadius},
                              render::kBlue, 5, render::ElementRole::Annotation});
    const solvers::Vec2 dir = w.velocity * (1.0 / w.velocity.norm());
    scene.elements.push_back({"velocity_arrow",
                              render::ArrowShape{w.ball.x + dir.x * (kBallRadius + 4),
                                                 w.ball.y + dir.y * (kBallRadius + 4),
                                                 w.ball.x + dir.x * (kBallRadius + 58),
                                                 w.ball.y + dir.y * (kBallRadius + 58), 4, 16},
                              render::kBlack, 4, render::ElementRole::Annotation});
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    std::vector<render::Keyframe> kfs;
    for (std::size_t i = 0; i < t.states.size(); ++i) {
      render::Keyframe kf;
      kf.poses["ball"] = render::CircleShape{t.states[i][0].get<double>(),
                                             t.states[i][1].get<double>(), kBallRadius};
      if (i > 0) kf.hidden.insert("velocity_arrow");  // direction cue is first-frame only
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto w = world_from_params(s.params);
    const auto sim =
        solvers::simulate_bounce(w, static_cast<int>(s.params.get_int("steps")) + 2);
    if (!sim.hit) {
      why = "replay does not hit the target";
      return false;
    }
    if (static_cast<std::int64_t>(sim.reflections.size()) != s.params.get_int("bounces")) {
      why = "replay bounce count differs from the declared count";
      return false;
    }
    if (sim.states.size() != s.solution.states.size()) {
      why = "replay state count differs from the stored solution";
      return false;
    }
    for (std::size_t i = 0; i < sim.states.size(); ++i) {
      const double dx = sim.states[i].x - s.solution.states[i][0].get<double>();
      const double dy = sim.states[i].y - s.solution.states[i][1].get<double>();
      if (std::abs(dx) > 1e-9 || std::abs(dy) > 1e-9) {
        why = "replay diverges from the stored trajectory";
        return false;
      }
    }
    return true;
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace vbvr::gen
