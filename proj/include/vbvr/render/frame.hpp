#pragma once

#include <cstdint>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/render/color.hpp"

namespace vbvr::render {

inline constexpr int kCanvasSize = 512;
inline constexpr int kFps = 24;

/// Row-major 8-bit RGB raster.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> px;  // 3 bytes per pixel

  Frame() = default;
  Frame(int w, int h, Rgb fill = kWhite) : width(w), height(h), px(static_cast<std::size_t>(w) * h * 3) {
    clear(fill);
  }

  void clear(Rgb c) {
    for (std::size_t i = 0; i + 2 < px.size(); i += 3) {
      px[i] = c.r;
      px[i + 1] = c.g;
      px[i + 2] = c.b;
    }
  }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  void set(int x, int y, Rgb c) {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    px[i] = c.r;
    px[i + 1] = c.g;
    px[i + 2] = c.b;
  }

  Rgb get(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return Rgb{px[i], px[i + 1], px[i + 2]};
  }

  friend bool operator==(const Frame&, const Frame&) = default;
};

struct FrameSequence {
  std::vector<Frame> frames;
  int fps = kFps;

  friend bool operator==(const FrameSequence&, const FrameSequence&) = default;
};

}  // namespace vbvr::render
