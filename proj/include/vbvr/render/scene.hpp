#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/render/raster.hpp"

namespace vbvr::render {

// Shape geometry in canvas pixels. Coordinates are doubles so animation can
// interpolate them; rasterization snaps deterministically.

struct CircleShape {
  double cx = 0, cy = 0, r = 0;
};
struct RingShape {
  double cx = 0, cy = 0, r_outer = 0, r_inner = 0;
};
struct RectShape {
  double x = 0, y = 0, w = 0, h = 0;
};
struct HollowRectShape {
  double x = 0, y = 0, w = 0, h = 0;
  int t = 2;
};
struct PolyShape {
  std::vector<P> pts;
};
struct LineShape {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  int t = 1;
};
struct ArrowShape {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  int t = 2;
  double head = 12;
};
struct CrossShape {
  double cx = 0, cy = 0, half = 0;
  int t = 2;
};
struct TextShape {
  double x = 0, y = 0;
  int scale = 2;
  std::string text;
};
struct GridLinesShape {
  double x = 0, y = 0;
  int cols = 0, rows = 0, cell = 0, t = 1;
};

using Shape = std::variant<CircleShape, RingShape, RectShape, HollowRectShape, PolyShape,
                           LineShape, ArrowShape, CrossShape, TextShape, GridLinesShape>;

/// Element roles relax the pairwise-overlap validation: annotations are
/// meant to sit on top of other elements, backdrops span the whole scene.
enum class ElementRole { Solid, Annotation, Backdrop };

struct Element {
  std::string id;
  Shape shape;
  Rgb fill = kBlack;
  int z = 0;
  ElementRole role = ElementRole::Solid;
};

struct SceneSpec {
  Rgb background = kWhite;
  std::vector<Element> elements;  // ids unique; draw order = z, then list order

  const Element* find(const std::string& id) const {
    for (const auto& e : elements) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }
  Element* find(const std::string& id) {
    for (auto& e : elements) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }
};

struct Bbox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open-ish; x1/y1 inclusive extents
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return std::max(0.0, width()) * std::max(0.0, height()); }
};

inline Bbox shape_bbox(const Shape& s) {
  return std::visit(
      [](const auto& v) -> Bbox {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CircleShape>) {
          return {v.cx - v.r, v.cy - v.r, v.cx + v.r, v.cy + v.r};
        } else if constexpr (std::is_same_v<T, RingShape>) {
          return {v.cx - v.r_outer, v.cy - v.r_outer, v.cx + v.r_outer, v.cy + v.r_outer};
        } else if constexpr (std::is_same_v<T, RectShape>) {
          return {v.x, v.y, v.x + v.w, v.y + v.h};
        } else if constexpr (std::is_same_v<T, HollowRectShape>) {
          return {v.x, v.y, v.x + v.w, v.y + v.h};
        } else if constexpr (std::is_same_v<T, PolyShape>) {
          Bbox b{1e18, 1e18, -1e18, -1e18};
          for (const auto& p : v.pts) {
            b.x0 = std::min(b.x0, p.x);
            b.y0 = std::min(b.y0, p.y);
            b.x1 = std::max(b.x1, p.x);
            b.y1 = std::max(b.y1, p.y);
          }
          return b;
        } else if constexpr (std::is_same_v<T, LineShape> || std::is_same_v<T, ArrowShape>) {
          return {std::min(v.x0, v.x1) - v.t, std::min(v.y0, v.y1) - v.t,
                  std::max(v.x0, v.x1) + v.t, std::max(v.y0, v.y1) + v.t};
        } else if constexpr (std::is_same_v<T, CrossShape>) {
          return {v.cx - v.half, v.cy - v.half, v.cx + v.half, v.cy + v.half};
        } else if constexpr (std::is_same_v<T, TextShape>) {
          return {v.x, v.y, v.x + text_width(v.text, v.scale), v.y + kGlyphHeight * v.scale};
        } else {
          return {v.x, v.y, v.x + static_cast<double>(v.cols) * v.cell,
                  v.y + static_cast<double>(v.rows) * v.cell};
        }
      },
      s);
}

inline void draw_shape(Frame& f, const Shape& s, Rgb c) {
  std::visit(
      [&f, c](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CircleShape>) {
          fill_circle(f, v.cx, v.cy, v.r, c);
        } else if constexpr (std::is_same_v<T, RingShape>) {
          fill_ring(f, v.cx, v.cy, v.r_outer, v.r_inner, c);
        } else if constexpr (std::is_same_v<T, RectShape>) {
          fill_rect(f, iround(v.x), iround(v.y), iround(v.w), iround(v.h), c);
        } else if constexpr (std::is_same_v<T, HollowRectShape>) {
          outline_rect(f, iround(v.x), iround(v.y), iround(v.w), iround(v.h), v.t, c);
        } else if constexpr (std::is_same_v<T, PolyShape>) {
          fill_polygon(f, v.pts, c);
        } else if constexpr (std::is_same_v<T, LineShape>) {
          draw_line(f, v.x0, v.y0, v.x1, v.y1, v.t, c);
        } else if constexpr (std::is_same_v<T, ArrowShape>) {
          draw_arrow(f, v.x0, v.y0, v.x1, v.y1, v.t, v.head, c);
        } else if constexpr (std::is_same_v<T, CrossShape>) {
          draw_cross(f, v.cx, v.cy, v.half, v.t, c);
        } else if constexpr (std::is_same_v<T, TextShape>) {
          draw_text(f, v.text, iround(v.x), iround(v.y), v.scale, c);
        } else {
          for (int i = 0; i <= v.cols; ++i) {
            fill_rect(f, iround(v.x) + i * v.cell, iround(v.y), v.t, v.rows * v.cell + v.t, c);
          }
          for (int j = 0; j <= v.rows; ++j) {
            fill_rect(f, iround(v.x), iround(v.y) + j * v.cell, v.cols * v.cell + v.t, v.t, c);
          }
        }
      },
      s);
}

/// Deterministic raster of a scene: background, then elements in z order
/// (stable for equal z). Out-of-canvas geometry is a hard error so boundary
/// violations surface during validation instead of clipping silently.
inline Frame render_scene(const SceneSpec& scene, int size = kCanvasSize) {
  Frame f(size, size, scene.background);
  std::vector<const Element*> order;
  order.reserve(scene.elements.size());
  for (const auto& e : scene.elements) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const Element* a, const Element* b) { return a->z < b->z; });
  for (const Element* e : order) {
    const Bbox b = shape_bbox(e->shape);
    if (b.x0 < -0.5 || b.y0 < -0.5 || b.x1 > size - 0.5 || b.y1 > size - 0.5) {
      throw RenderError("element out of canvas: " + e->id);
    }
    draw_shape(f, e->shape, e->fill);
  }
  return f;
}

}  // namespace vbvr::render
