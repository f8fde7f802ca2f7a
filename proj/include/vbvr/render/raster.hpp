#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "vbvr/render/font5x7.hpp"
#include "vbvr/render/frame.hpp"

namespace vbvr::render {

// Hard-edged integer rasterization. No anti-aliasing anywhere: every drawn
// pixel carries the element color exactly, so downstream color-mask
// detection is exact as well. All rounding goes through llround, which is
// deterministic for IEEE doubles.

inline int iround(double v) { return static_cast<int>(std::llround(v)); }

inline void fill_rect(Frame& f, int x0, int y0, int w, int h, Rgb c) {
  const int xa = std::max(0, x0);
  const int ya = std::max(0, y0);
  const int xb = std::min(f.width, x0 + w);
  const int yb = std::min(f.height, y0 + h);
  for (int y = ya; y < yb; ++y) {
    for (int x = xa; x < xb; ++x) f.set(x, y, c);
  }
}

inline void outline_rect(Frame& f, int x0, int y0, int w, int h, int t, Rgb c) {
  fill_rect(f, x0, y0, w, t, c);
  fill_rect(f, x0, y0 + h - t, w, t, c);
  fill_rect(f, x0, y0, t, h, c);
  fill_rect(f, x0 + w - t, y0, t, h, c);
}

inline void fill_circle(Frame& f, double cx, double cy, double r, Rgb c) {
  const int icx = iround(cx), icy = iround(cy), ir = iround(r);
  const std::int64_t r2 = static_cast<std::int64_t>(ir) * ir;
  for (int dy = -ir; dy <= ir; ++dy) {
    const int y = icy + dy;
    if (y < 0 || y >= f.height) continue;
    const std::int64_t rem = r2 - static_cast<std::int64_t>(dy) * dy;
    const int dx = static_cast<int>(std::sqrt(static_cast<double>(rem)));
    const int xa = std::max(0, icx - dx);
    const int xb = std::min(f.width - 1, icx + dx);
    for (int x = xa; x <= xb; ++x) f.set(x, y, c);
  }
}

inline void fill_ring(Frame& f, double cx, double cy, double r_outer, double r_inner, Rgb c) {
  const int icx = iround(cx), icy = iround(cy);
  const int ro = iround(r_outer), ri = iround(r_inner);
  const std::int64_t ro2 = static_cast<std::int64_t>(ro) * ro;
  const std::int64_t ri2 = static_cast<std::int64_t>(ri) * ri;
  for (int dy = -ro; dy <= ro; ++dy) {
    const int y = icy + dy;
    if (y < 0 || y >= f.height) continue;
    const std::int64_t dy2 = static_cast<std::int64_t>(dy) * dy;
    const int xo = static_cast<int>(std::sqrt(static_cast<double>(ro2 - dy2)));
    const int xi = dy2 <= ri2 ? static_cast<int>(std::sqrt(static_cast<double>(ri2 - dy2))) : -1;
    for (int x = std::max(0, icx - xo); x <= std::min(f.width - 1, icx + xo); ++x) {
      const int adx = std::abs(x - icx);
      if (adx > xi) f.set(x, y, c);
    }
  }
}

struct P {
  double x = 0;
  double y = 0;
  friend bool operator==(const P&, const P&) = default;
};

/// Even-odd polygon fill by per-pixel crossing test at pixel centers.
/// Coordinates are snapped to a half-pixel lattice (x2 integer grid) so the
/// inside test is pure integer arithmetic.
inline void fill_polygon(Frame& f, const std::vector<P>& pts, Rgb c) {
  if (pts.size() < 3) return;
  const std::size_t n = pts.size();
  std::vector<std::int64_t> vx(n), vy(n);
  double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (std::size_t i = 0; i < n; ++i) {
    vx[i] = std::llround(pts[i].x * 2.0);
    vy[i] = std::llround(pts[i].y * 2.0);
    minx = std::min(minx, pts[i].x);
    maxx = std::max(maxx, pts[i].x);
    miny = std::min(miny, pts[i].y);
    maxy = std::max(maxy, pts[i].y);
  }
  const int xa = std::max(0, static_cast<int>(std::floor(minx)));
  const int xb = std::min(f.width - 1, static_cast<int>(std::ceil(maxx)));
  const int ya = std::max(0, static_cast<int>(std::floor(miny)));
  const int yb = std::min(f.height - 1, static_cast<int>(std::ceil(maxy)));
  for (int y = ya; y <= yb; ++y) {
    const std::int64_t py = 2 * static_cast<std::int64_t>(y) + 1;  // pixel center, x2 grid
    for (int x = xa; x <= xb; ++x) {
      const std::int64_t px = 2 * static_cast<std::int64_t>(x) + 1;
      bool inside = false;
      for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const std::int64_t yi = vy[i], yj = vy[j];
        if ((yi > py) == (yj > py)) continue;
        // x coordinate where the edge crosses the scanline, compared as
        // cross-multiplication to stay in integers
        const std::int64_t dx = vx[j] - vx[i];
        const std::int64_t dy = vy[j] - vy[i];
        const std::int64_t lhs = (px - vx[i]) * dy;
        const std::int64_t rhs = (py - vy[i]) * dx;
        if (dy > 0 ? (lhs < rhs) : (lhs > rhs)) inside = !inside;
      }
      if (inside) f.set(x, y, c);
    }
  }
}

/// Bresenham line with a square stamp of side (2*half+1) per point.
inline void draw_line(Frame& f, double x0d, double y0d, double x1d, double y1d, int thickness,
                      Rgb c) {
  int x0 = iround(x0d), y0 = iround(y0d), x1 = iround(x1d), y1 = iround(y1d);
  const int half = std::max(0, (thickness - 1) / 2);
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    fill_rect(f, x0 - half, y0 - half, 2 * half + 1, 2 * half + 1, c);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

/// Line plus a filled triangular head at the (x1, y1) end.
inline void draw_arrow(Frame& f, double x0, double y0, double x1, double y1, int thickness,
                       double head_len, Rgb c) {
  const double dx = x1 - x0, dy = y1 - y0;
  const double len = std::sqrt(dx * dx + dy * dy);
  if (len < 1e-9) return;
  const double ux = dx / len, uy = dy / len;
  const double bx = x1 - ux * head_len, by = y1 - uy * head_len;
  draw_line(f, x0, y0, bx, by, thickness, c);
  const double w = head_len * 0.55;
  fill_polygon(f, {{x1, y1}, {bx - uy * w, by + ux * w}, {bx + uy * w, by - ux * w}}, c);
}

/// X mark: two crossing diagonals inside a (2*half)^2 box.
inline void draw_cross(Frame& f, double cx, double cy, double half, int thickness, Rgb c) {
  draw_line(f, cx - half, cy - half, cx + half, cy + half, thickness, c);
  draw_line(f, cx - half, cy + half, cx + half, cy - half, thickness, c);
}

/// Digit string from the embedded font, scaled integrally. (x, y) is the top
/// left of the first glyph cell.
inline void draw_text(Frame& f, const std::string& text, int x, int y, int scale, Rgb c) {
  int pen = x;
  for (char ch : text) {
    const Glyph5x7* g = lookup_glyph(ch);
    for (int row = 0; row < kGlyphHeight; ++row) {
      for (int col = 0; col < kGlyphWidth; ++col) {
        if (g->rows[static_cast<std::size_t>(row)] & (1 << (kGlyphWidth - 1 - col))) {
          fill_rect(f, pen + col * scale, y + row * scale, scale, scale, c);
        }
      }
    }
    pen += kGlyphAdvance * scale;
  }
}

inline int text_width(const std::string& text, int scale) {
  if (text.empty()) return 0;
  return (static_cast<int>(text.size() - 1) * kGlyphAdvance + kGlyphWidth) * scale;
}

}  // namespace vbvr::render
