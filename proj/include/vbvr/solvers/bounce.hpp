#pragma once

#include <cmath>
#include <vector>

#include "vbvr/core/error.hpp"

namespace vbvr::solvers {

struct Vec2 {
  double x = 0;
  double y = 0;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  double norm() const { return std::sqrt(x * x + y * y); }
};

/// Axis-aligned box with elastic walls. The reflection planes are the box
/// extents; the generator insets them by the ball radius so the drawn ball
/// visually touches the wall at contact.
struct BounceWorld {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  Vec2 ball;      // center at t = 0
  Vec2 velocity;  // px per step
  Vec2 target;    // disc center
  double target_radius = 0;

  bool inside(Vec2 p) const {
    return p.x > min_x && p.x < max_x && p.y > min_y && p.y < max_y;
  }
};

struct BounceResult {
  /// Piecewise-linear center positions: one per step, with exact contact
  /// points spliced in at reflections and the exact entry point appended on
  /// a hit. Consecutive elements are always collinear segments.
  std::vector<Vec2> states;
  std::vector<Vec2> reflections;  // exact wall-contact points, in order
  bool hit = false;
};

namespace bounce_detail {

/// First t in (0, 1] where p + d*t meets a wall plane, or >1 when none.
inline double wall_event(const BounceWorld& w, Vec2 p, Vec2 d, int& axis) {
  double best = 2.0;
  axis = -1;
  if (d.x < 0) {
    const double t = (w.min_x - p.x) / d.x;
    if (t > 1e-12 && t < best) { best = t; axis = 0; }
  } else if (d.x > 0) {
    const double t = (w.max_x - p.x) / d.x;
    if (t > 1e-12 && t < best) { best = t; axis = 0; }
  }
  if (d.y < 0) {
    const double t = (w.min_y - p.y) / d.y;
    if (t > 1e-12 && t < best) { best = t; axis = 1; }
  } else if (d.y > 0) {
    const double t = (w.max_y - p.y) / d.y;
    if (t > 1e-12 && t < best) { best = t; axis = 1; }
  }
  return best;
}

/// First t in (0, 1] where the segment p..p+d enters the target disc, or >1.
inline double disc_entry(const BounceWorld& w, Vec2 p, Vec2 d) {
  const Vec2 m = p - w.target;
  const double a = d.x * d.x + d.y * d.y;
  const double b = 2 * (m.x * d.x + m.y * d.y);
  const double c = m.x * m.x + m.y * m.y - w.target_radius * w.target_radius;
  if (c <= 0) return 0;  // already inside
  const double disc = b * b - 4 * a * c;
  if (disc < 0 || a <= 0) return 2.0;
  const double t = (-b - std::sqrt(disc)) / (2 * a);
  return t > 1e-12 && t <= 1.0 ? t : 2.0;
}

}  // namespace bounce_detail

/// Steps the ball until it enters the target disc or the horizon runs out.
/// Reflection contacts flip exactly one velocity component and are recorded
/// as explicit states, so the emitted polyline shows the true bounce points.
inline BounceResult simulate_bounce(const BounceWorld& w, int horizon) {
  if (w.velocity.norm() <= 0) throw InvalidInputError("ball needs a nonzero velocity");
  if (!w.inside(w.ball) || !w.inside(w.target)) {
    throw InvalidInputError("ball and target must start strictly inside the box");
  }
  BounceResult out;
  Vec2 pos = w.ball;
  Vec2 vel = w.velocity;
  out.states.push_back(pos);
  for (int step = 0; step < horizon && !out.hit; ++step) {
    double remaining = 1.0;
    while (remaining > 1e-12) {
      const Vec2 d = vel * remaining;
      const double t_hit = bounce_detail::disc_entry(w, pos, d);
      int axis = -1;
      const double t_wall = bounce_detail::wall_event(w, pos, d, axis);
      if (t_hit <= 1.0 && t_hit <= t_wall) {
        pos = pos + d * t_hit;
        out.states.push_back(pos);
        out.hit = true;
        break;
      }
      if (t_wall <= 1.0) {
        pos = pos + d * t_wall;
        out.states.push_back(pos);
        out.reflections.push_back(pos);
        if (axis == 0) vel.x = -vel.x; else vel.y = -vel.y;
        remaining *= (1.0 - t_wall);
      } else {
        pos = pos + d;
        out.states.push_back(pos);
        remaining = 0;
      }
    }
  }
  return out;
}

/// Mirror-image construction: reflects the target across the given wall
/// planes (in bounce order) and returns the aim point whose straight line
/// from `from` realizes that bounce sequence. Axes: 0 = x wall, 1 = y wall;
/// `at_min` picks the min or max plane.
struct MirrorWall {
  int axis = 0;
  bool at_min = false;
};

inline Vec2 mirror_aim_point(const BounceWorld& w, const std::vector<MirrorWall>& walls) {
  Vec2 p = w.target;
  for (auto it = walls.rbegin(); it != walls.rend(); ++it) {
    if (it->axis == 0) {
      const double plane = it->at_min ? w.min_x : w.max_x;
      p.x = 2 * plane - p.x;
    } else {
      const double plane = it->at_min ? w.min_y : w.max_y;
      p.y = 2 * plane - p.y;
    }
  }
  return p;
}

}  // namespace vbvr::solvers
