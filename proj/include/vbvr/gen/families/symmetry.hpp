#pragma once

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"

namespace vbvr::gen {

/// O-49: the left half of a grid holds a colored pattern; the video fills the
/// right half with its mirror image, one column at a time from the center
/// outward. States count the revealed mirror columns.
class SymmetryGenerator final : public FamilyGenerator {
 public:
  SymmetryGenerator() {
    spec_.task = TaskId{"O-49", Faculty::Abstraction};
    spec_.num_strata = 3;
    spec_.int_ranges["grid_size"] = {6, 10};
    spec_.int_ranges["num_colors"] = {2, 3};
    spec_.prompt_template =
        "The scene shows a {grid}x{grid} grid. The left half contains a pattern of colored "
        "cells and the right half is empty. Fill in the right half so that the final grid is "
        "mirror-symmetric about the vertical center line, revealing the reflected pattern one "
        "column at a time from the center outward. Keep the left half of the pattern unchanged.";
    spec_.rubric = {{"symmetry_correctness", 0.40},
                    {"reveal_progression", 0.30},
                    {"stimulus_preservation", 0.20},
                    {"task_completion", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  /// Color index of a left-half cell, or -1 when empty. Pattern string is
  /// row-major over the left half, '.' for empty, digit for palette index.
  static int pattern_at(const ParamAssignment& p, int row, int col) {
    const int half = static_cast<int>(p.get_int("grid_size")) / 2;
    const char c = p.get_str("pattern")[static_cast<std::size_t>(row * half + col)];
    return c == '.' ? -1 : c - '0';
  }

  static render::Rgb pattern_color(int color_index) {
    static constexpr render::Rgb kPatternPalette[3] = {render::kBlue, render::kOrange,
                                                       render::kGreen};
    return kPatternPalette[static_cast<std::size_t>(color_index)];
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    static constexpr int kSizes[3] = {6, 8, 10};
    const int n = kSizes[stratum];
    const int half = n / 2;
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      const int m = static_cast<int>(rng.uniform_int(2, 3));
      std::string pattern(static_cast<std::size_t>(n * half), '.');
      int filled = 0;
      for (auto& c : pattern) {
        if (rng.chance(0.45)) {
          c = static_cast<char>('0' + rng.uniform_int(0, m - 1));
          ++filled;
        }
      }
      if (filled < n * half / 5 || filled == n * half) continue;
      ParamAssignment p;
      p.difficulty_stratum = stratum;
      p.values["grid_size"] = static_cast<std::int64_t>(n);
      p.values["num_colors"] = static_cast<std::int64_t>(m);
      p.values["pattern"] = pattern;
      return p;
    }
    throw InfeasibleError("O-49: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const int half = static_cast<int>(p.get_int("grid_size")) / 2;
    Trajectory t;
    t.step_semantics = "column-reveal";
    for (int k = 0; k <= half; ++k) t.states.push_back(Json(k));
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const int n = static_cast<int>(p.get_int("grid_size"));
    const int half = n / 2;
    const auto geom = board_geometry(n);
    render::SceneSpec scene;
    scene.elements.push_back(gridlines_element(geom));
    // center line marks the mirror axis
    const double cx = geom.origin_x + half * geom.cell;
    scene.elements.push_back({"axis",
                              render::LineShape{cx, static_cast<double>(geom.origin_y), cx,
                                                static_cast<double>(geom.origin_y + n * geom.cell), 3},
                              render::kBlack, 1, render::ElementRole::Annotation});
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < half; ++c) {
        const int color = pattern_at(p, r, c);
        if (color < 0) continue;
        scene.elements.push_back({"cell_" + std::to_string(r) + "_" + std::to_string(c),
                                  cell_rect(geom, {r, c}), pattern_color(color), 2,
                                  render::ElementRole::Solid});
        // mirror cell: column (n-1-c); hidden until its reveal keyframe
        scene.elements.push_back({"mirror_" + std::to_string(r) + "_" + std::to_string(c),
                                  cell_rect(geom, {r, n - 1 - c}), pattern_color(color), 2,
                                  render::ElementRole::Solid});
      }
    }
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    const int n = static_cast<int>(p.get_int("grid_size"));
    const int half = n / 2;
    std::vector<render::Keyframe> kfs;
    for (const auto& state : t.states) {
      const int revealed = state.get<int>();
      render::Keyframe kf;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < half; ++c) {
          if (pattern_at(p, r, c) < 0) continue;
          // column c mirrors into reveal slot (half-1-c) counted from center
          if (half - 1 - c >= revealed) {
            kf.hidden.insert("mirror_" + std::to_string(r) + "_" + std::to_string(c));
          }
        }
      }
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const int half = static_cast<int>(s.params.get_int("grid_size")) / 2;
    const auto& states = s.solution.states;
    if (static_cast<int>(states.size()) != half + 1) {
      why = "expected one state per revealed column";
      return false;
    }
    for (int k = 0; k <= half; ++k) {
      if (states[static_cast<std::size_t>(k)].get<int>() != k) {
        why = "reveal counter must increase by one per step";
        return false;
      }
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
