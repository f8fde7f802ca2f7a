#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vbvr/core/params.hpp"
#include "vbvr/core/task.hpp"
#include "vbvr/core/trajectory.hpp"
#include "vbvr/render/animate.hpp"
#include "vbvr/render/frame.hpp"
#include "vbvr/render/scene.hpp"

namespace vbvr {

/// One fully constructed task instance. Everything below is derived
/// deterministically from (task, split, index); the frames are a pure
/// function of scene + keyframes.
struct Sample {
  TaskId task;
  SplitTag split = SplitTag::Train;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  ParamAssignment params;
  std::string prompt;
  render::SceneSpec scene;                 // first-frame scene
  std::vector<render::Keyframe> keyframes; // one per solution state
  Trajectory solution;
  render::Frame first_frame;
  render::Frame final_frame;
  render::FrameSequence gt_frames;
};

}  // namespace vbvr
