#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vbvr/core/params.hpp"
#include "vbvr/core/sample.hpp"

namespace vbvr {

/// Per-run registry of parameter-hash keys. Inserts are serialized; this is
/// the only mutable state shared between generation workers. An optional
/// spill file persists keys across runs (one hex key per line).
class DuplicateRegistry {
 public:
  DuplicateRegistry() = default;

  explicit DuplicateRegistry(const std::filesystem::path& spill_file) : spill_path_(spill_file) {
    std::ifstream in(spill_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.size() == 32) {
        DuplicateKey k;
        k.hi = std::stoull(line.substr(0, 16), nullptr, 16);
        k.lo = std::stoull(line.substr(16, 16), nullptr, 16);
        seen_.insert(k);
      }
    }
  }

  /// True when the key was new (and is now recorded).
  bool insert(const DuplicateKey& k) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!seen_.insert(k).second) return false;
    if (spill_path_) {
      std::ofstream out(*spill_path_, std::ios::app);
      out << k.hex() << "\n";
    }
    return true;
  }

  bool contains(const DuplicateKey& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    return seen_.count(k) != 0;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return seen_.size();
  }

 private:
  mutable std::mutex mu_;
  std::set<DuplicateKey> seen_;
  std::optional<std::filesystem::path> spill_path_;
};

struct ValidationReport {
  std::map<std::string, bool> flags;
  std::vector<std::string> failures;

  bool pass() const {
    for (const auto& [name, ok] : flags) {
      if (!ok) return false;
    }
    return true;
  }
};

inline constexpr const char* kCriterionSolvability = "solvability";
inline constexpr const char* kCriterionVisual = "visual_compliance";
inline constexpr const char* kCriterionBoundary = "boundary_constraints";
inline constexpr const char* kCriterionBounds = "parameter_bounds";
inline constexpr const char* kCriterionDuplicate = "duplicate";
inline constexpr const char* kCriterionVideoDep = "video_dependency";

struct ValidationHooks {
  /// Family checker: does the stored solution actually solve the instance?
  std::function<bool(const Sample&, std::string& why)> checker;
  /// Declared-range check from the family spec.
  std::function<bool(const ParamAssignment&, std::string& why)> bounds_check;
  DuplicateRegistry* registry = nullptr;  // optional
};

// Visual-compliance thresholds (the paper asks for "visual clarity" without
// numbers): solid elements must not overlap more than 10% of the smaller
// element's box, must span at least 12 px, and glyphs scale at least 2x.
inline constexpr double kMaxOverlapFraction = 0.10;
inline constexpr double kMinElementExtent = 12.0;
inline constexpr int kMinGlyphScale = 2;

namespace validate_detail {

inline double overlap_area(const render::Bbox& a, const render::Bbox& b) {
  const double w = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  const double h = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
  return w > 0 && h > 0 ? w * h : 0.0;
}

inline bool bbox_in_canvas(const render::Bbox& b, int size) {
  return b.x0 >= -0.5 && b.y0 >= -0.5 && b.x1 <= size - 0.5 && b.y1 <= size - 0.5;
}

}  // namespace validate_detail

/// Runs the six-criteria contract. Failures are report entries, never
/// exceptions. The duplicate flag records the key as a side effect, exactly
/// once per distinct sample.
inline ValidationReport validate_sample(const Sample& sample, const ValidationHooks& hooks) {
  using namespace validate_detail;
  ValidationReport rep;
  const auto fail = [&rep](const char* flag, const std::string& why) {
    rep.flags[flag] = false;
    rep.failures.push_back(std::string(flag) + ": " + why);
  };

  // solvability
  rep.flags[kCriterionSolvability] = true;
  if (hooks.checker) {
    std::string why;
    if (!hooks.checker(sample, why)) fail(kCriterionSolvability, why);
  }

  // boundary: base scene plus every keyframe pose stays on canvas
  rep.flags[kCriterionBoundary] = true;
  for (const auto& e : sample.scene.elements) {
    if (!bbox_in_canvas(render::shape_bbox(e.shape), render::kCanvasSize)) {
      fail(kCriterionBoundary, "element outside canvas: " + e.id);
      break;
    }
  }
  if (rep.flags[kCriterionBoundary]) {
    for (const auto& kf : sample.keyframes) {
      for (const auto& [id, pose] : kf.poses) {
        if (!bbox_in_canvas(render::shape_bbox(pose), render::kCanvasSize)) {
          fail(kCriterionBoundary, "keyframe pose outside canvas: " + id);
          break;
        }
      }
      if (!rep.flags[kCriterionBoundary]) break;
    }
  }

  // visual compliance: pairwise overlap + minimum sizes on the first frame
  rep.flags[kCriterionVisual] = true;
  const auto& els = sample.scene.elements;
  for (std::size_t i = 0; i < els.size() && rep.flags[kCriterionVisual]; ++i) {
    if (els[i].role != render::ElementRole::Solid) continue;
    const auto bi = render::shape_bbox(els[i].shape);
    if (const auto* text = std::get_if<render::TextShape>(&els[i].shape)) {
      if (text->scale < kMinGlyphScale) fail(kCriterionVisual, "glyph scale below 2x: " + els[i].id);
      continue;
    }
    if (std::min(bi.width(), bi.height()) < kMinElementExtent) {
      fail(kCriterionVisual, "element smaller than 12 px: " + els[i].id);
      continue;
    }
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (els[j].role != render::ElementRole::Solid) continue;
      if (std::holds_alternative<render::TextShape>(els[j].shape)) continue;
      const auto bj = render::shape_bbox(els[j].shape);
      const double smaller = std::min(bi.area(), bj.area());
      if (smaller <= 0) continue;
      if (overlap_area(bi, bj) > kMaxOverlapFraction * smaller) {
        fail(kCriterionVisual, "elements overlap: " + els[i].id + " / " + els[j].id);
        break;
      }
    }
  }

  // parameter bounds
  rep.flags[kCriterionBounds] = true;
  if (hooks.bounds_check) {
    std::string why;
    if (!hooks.bounds_check(sample.params, why)) fail(kCriterionBounds, why);
  }

  // duplicate
  rep.flags[kCriterionDuplicate] = true;
  if (hooks.registry != nullptr) {
    if (!hooks.registry->insert(hash_params(sample.params))) {
      fail(kCriterionDuplicate, "parameter key already seen this run");
    }
  }

  // video dependency: a pure-static render is not a video task
  rep.flags[kCriterionVideoDep] = true;
  if (sample.solution.transitions() < 1) {
    fail(kCriterionVideoDep, "solution has no transitions");
  }

  return rep;
}

}  // namespace vbvr
