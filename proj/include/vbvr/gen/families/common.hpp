#pragma once

#include <string>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/core/params.hpp"
#include "vbvr/core/rng.hpp"
#include "vbvr/render/scene.hpp"
#include "vbvr/solvers/grid.hpp"

namespace vbvr::gen {

inline constexpr int kDrawAttemptBudget = 1000;

// Grid cells travel through params and state JSON in one convention only:
// Coord{x=row, y=col} and [row, col] arrays. Use these helpers, never raw
// member access, when a Coord means a cell.
inline Coord coord_from_cell(solvers::Cell c) {
  return Coord{static_cast<double>(c.r), static_cast<double>(c.c)};
}
inline solvers::Cell cell_from_coord(const Coord& c) {
  return solvers::Cell{static_cast<int>(c.x), static_cast<int>(c.y)};
}
inline Json state_from_cell(solvers::Cell c) { return Json::array({c.r, c.c}); }
inline solvers::Cell cell_from_state(const Json& j) {
  return solvers::Cell{j.at(0).get<int>(), j.at(1).get<int>()};
}

/// Pixel frame of an n x n board centered on the canvas.
struct BoardGeometry {
  int origin_x = 0;
  int origin_y = 0;
  int cell = 0;
  int n = 0;
};

inline BoardGeometry board_geometry(int n, int canvas = render::kCanvasSize, int margin = 16) {
  BoardGeometry g;
  g.n = n;
  g.cell = (canvas - 2 * margin) / n;
  g.origin_x = (canvas - g.cell * n) / 2;
  g.origin_y = g.origin_x;
  return g;
}

inline render::P cell_center(const BoardGeometry& g, solvers::Cell c) {
  return render::P{g.origin_x + (c.c + 0.5) * g.cell, g.origin_y + (c.r + 0.5) * g.cell};
}

/// Filled cell rect inset from the gridlines so same-color components stay
/// separable in the raster.
inline render::RectShape cell_rect(const BoardGeometry& g, solvers::Cell c, int inset = 3) {
  return render::RectShape{static_cast<double>(g.origin_x + c.c * g.cell + inset),
                           static_cast<double>(g.origin_y + c.r * g.cell + inset),
                           static_cast<double>(g.cell - 2 * inset + 1),
                           static_cast<double>(g.cell - 2 * inset + 1)};
}

inline render::Element gridlines_element(const BoardGeometry& g) {
  return render::Element{"grid",
                         render::GridLinesShape{static_cast<double>(g.origin_x),
                                                static_cast<double>(g.origin_y), g.n, g.n, g.cell, 1},
                         render::kGridGray, 0, render::ElementRole::Backdrop};
}

/// Named colors for prompt text ("Blue key", "Blue door").
struct NamedColor {
  const char* name;
  render::Rgb rgb;
};

inline constexpr NamedColor kNamedColors[] = {
    {"Blue", render::kBlue},     {"Red", render::kRed},     {"Yellow", render::kYellow},
    {"Purple", render::kPurple}, {"Orange", render::kOrange}, {"Cyan", render::kCyan},
    {"Green", render::kGreen},   {"Magenta", render::kMagenta},
};

inline render::Rgb color_by_name(const std::string& name) {
  for (const auto& c : kNamedColors) {
    if (name == c.name) return c.rgb;
  }
  throw InvalidParamError("unknown color name: " + name);
}

inline std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// All cells of an n x n grid in row-major order (deterministic shuffle base).
inline std::vector<solvers::Cell> all_cells(int n) {
  std::vector<solvers::Cell> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) cells.push_back({r, c});
  }
  return cells;
}

}  // namespace vbvr::gen
