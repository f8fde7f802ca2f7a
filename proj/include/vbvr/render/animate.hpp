#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/render/scene.hpp"

namespace vbvr::render {

/// One symbolic state projected onto the scene: geometry overrides for the
/// elements that move, plus the set of elements hidden at this state.
/// A consumed item (picked-up key) is visible at its pickup keyframe and
/// hidden from the next one, so it disappears on the first frame *after*
/// pickup.
struct Keyframe {
  std::map<std::string, Shape> poses;
  std::set<std::string> hidden;
};

namespace detail {

inline double lerp(double a, double b, double t) { return a + (b - a) * t; }

inline Shape lerp_shape(const Shape& a, const Shape& b, double t) {
  if (a.index() != b.index()) throw RenderError("keyframe shape kind changed between states");
  Shape out = a;
  std::visit(
      [&](auto& o) {
        using T = std::decay_t<decltype(o)>;
        const T& bb = std::get<T>(b);
        const T& aa = std::get<T>(a);
        if constexpr (std::is_same_v<T, CircleShape>) {
          o.cx = lerp(aa.cx, bb.cx, t);
          o.cy = lerp(aa.cy, bb.cy, t);
          o.r = lerp(aa.r, bb.r, t);
        } else if constexpr (std::is_same_v<T, RingShape>) {
          o.cx = lerp(aa.cx, bb.cx, t);
          o.cy = lerp(aa.cy, bb.cy, t);
        } else if constexpr (std::is_same_v<T, RectShape> || std::is_same_v<T, HollowRectShape>) {
          o.x = lerp(aa.x, bb.x, t);
          o.y = lerp(aa.y, bb.y, t);
          o.w = lerp(aa.w, bb.w, t);
          o.h = lerp(aa.h, bb.h, t);
        } else if constexpr (std::is_same_v<T, PolyShape>) {
          if (aa.pts.size() != bb.pts.size()) throw RenderError("polygon vertex count changed");
          for (std::size_t i = 0; i < o.pts.size(); ++i) {
            o.pts[i].x = lerp(aa.pts[i].x, bb.pts[i].x, t);
            o.pts[i].y = lerp(aa.pts[i].y, bb.pts[i].y, t);
          }
        } else if constexpr (std::is_same_v<T, LineShape> || std::is_same_v<T, ArrowShape>) {
          o.x0 = lerp(aa.x0, bb.x0, t);
          o.y0 = lerp(aa.y0, bb.y0, t);
          o.x1 = lerp(aa.x1, bb.x1, t);
          o.y1 = lerp(aa.y1, bb.y1, t);
        } else if constexpr (std::is_same_v<T, CrossShape>) {
          o.cx = lerp(aa.cx, bb.cx, t);
          o.cy = lerp(aa.cy, bb.cy, t);
        } else if constexpr (std::is_same_v<T, TextShape>) {
          o.x = lerp(aa.x, bb.x, t);
          o.y = lerp(aa.y, bb.y, t);
        }
        // GridLinesShape never moves
      },
      out);
  return out;
}

}  // namespace detail

/// Scene with keyframe `k` applied (exact poses, exact visibility).
inline SceneSpec scene_at(const SceneSpec& base, const Keyframe& kf) {
  SceneSpec s = base;
  for (const auto& [id, shape] : kf.poses) {
    Element* e = s.find(id);
    if (e == nullptr) throw RenderError("keyframe references unknown element: " + id);
    e->shape = shape;
  }
  std::vector<Element> kept;
  kept.reserve(s.elements.size());
  for (auto& e : s.elements) {
    if (kf.hidden.count(e.id) == 0) kept.push_back(std::move(e));
  }
  s.elements = std::move(kept);
  return s;
}

/// Frame count contract: frames_per_step * (|keyframes| - 1) + hold.
/// Segment s contributes frames at t = 0/F .. (F-1)/F; the final keyframe is
/// rendered `hold` times, so the last frame always equals
/// render_scene(scene_at(base, keyframes.back())).
inline FrameSequence render_keyframes(const SceneSpec& base, const std::vector<Keyframe>& kfs,
                                      int frames_per_step, int hold) {
  if (kfs.empty()) throw RenderError("no keyframes");
  if (frames_per_step < 1 || hold < 1) throw RenderError("frames_per_step and hold must be >= 1");
  FrameSequence seq;
  seq.fps = kFps;
  for (std::size_t s = 0; s + 1 < kfs.size(); ++s) {
    const Keyframe& a = kfs[s];
    const Keyframe& b = kfs[s + 1];
    for (int f = 0; f < frames_per_step; ++f) {
      const double t = static_cast<double>(f) / frames_per_step;
      Keyframe mid;
      if (f == 0) {
        mid = a;
      } else {
        for (const auto& [id, pose_a] : a.poses) {
          auto it = b.poses.find(id);
          if (it == b.poses.end()) throw RenderError("keyframe drops pose for element: " + id);
          mid.poses[id] = detail::lerp_shape(pose_a, it->second, t);
        }
        // mid-segment visibility: hidden if hidden at either end, which
        // makes consumed items vanish right after their pickup keyframe
        mid.hidden = a.hidden;
        mid.hidden.insert(b.hidden.begin(), b.hidden.end());
      }
      seq.frames.push_back(render_scene(scene_at(base, mid)));
    }
  }
  const Frame last = render_scene(scene_at(base, kfs.back()));
  for (int i = 0; i < hold; ++i) seq.frames.push_back(last);
  return seq;
}

}  // namespace vbvr::render
