#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vbvr {

/// Symbolic solution: ordered states plus how one step is meant to be read.
/// State encoding is family-specific JSON ([r,c] cells, node ids, 9-tile
/// boards, [x,y] poses, ...), which is exactly what the manifest stores.
struct Trajectory {
  std::vector<nlohmann::json> states;
  std::string step_semantics;  // e.g. "grid-move", "node-hop", "tile-slide", "continuous-pose"
  int frames_per_step = 4;

  std::size_t transitions() const { return states.empty() ? 0 : states.size() - 1; }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

inline constexpr int kDefaultFramesPerStep = 4;
inline constexpr int kDefaultHoldFrames = 12;  // ~0.5 s at 24 fps

}  // namespace vbvr
