#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/render/png.hpp"

namespace vbvr::render {

namespace fs = std::filesystem;

inline constexpr const char* kEncoderEnv = "VBVR_ENCODER";
inline constexpr const char* kDecoderEnv = "VBVR_DECODER";

inline std::string frame_file_name(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%05zu.png", index);
  return buf;
}

namespace video_detail {

struct ToolResult {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing stdout+stderr for diagnostics.
inline ToolResult run_tool(const std::string& cmd) {
  ToolResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) throw CodecError("cannot spawn codec tool: " + cmd);
  char buf[512];
  while (std::fgets(buf, sizeof(buf), pipe) != nullptr) r.output += buf;
  const int status = pclose(pipe);
  r.exit_code = status >= 0 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

inline fs::path make_temp_dir(const char* tag) {
  static std::atomic<unsigned> counter{0};
  const auto dir = fs::temp_directory_path() /
                   ("vbvr-" + std::string(tag) + "-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter.fetch_add(1)));
  fs::create_directories(dir);
  return dir;
}

}  // namespace video_detail

inline const char* configured_encoder() { return std::getenv(kEncoderEnv); }
inline const char* configured_decoder() { return std::getenv(kDecoderEnv); }

inline void write_frames_dir(const FrameSequence& seq, const fs::path& dir) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < seq.frames.size(); ++i) {
    write_png_file((dir / frame_file_name(i)).string(), seq.frames[i]);
  }
}

inline FrameSequence read_frames_dir(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".png") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw CodecError("no frames in directory: " + dir.string());
  FrameSequence seq;
  for (const auto& p : files) seq.frames.push_back(read_png_file(p.string()));
  return seq;
}

/// Encodes via the external tool named by VBVR_ENCODER, invoked as
/// `$VBVR_ENCODER <frames_dir> <out_file> <fps>`. Without a configured tool
/// the sequence is written as <parent>/frames/%05d.png instead. Returns the
/// path actually produced.
inline fs::path encode_video(const FrameSequence& seq, const fs::path& out_mp4) {
  if (seq.frames.empty()) throw CodecError("refusing to encode an empty sequence");
  const char* tool = configured_encoder();
  if (tool == nullptr || *tool == '\0') {
    const fs::path dir = out_mp4.parent_path() / "frames";
    write_frames_dir(seq, dir);
    return dir;
  }
  const fs::path tmp = video_detail::make_temp_dir("enc");
  write_frames_dir(seq, tmp);
  const std::string cmd = std::string(tool) + " " + video_detail::quoted(tmp) + " " +
                          video_detail::quoted(out_mp4) + " " + std::to_string(seq.fps);
  const auto r = video_detail::run_tool(cmd);
  fs::remove_all(tmp);
  if (r.exit_code != 0 || !fs::exists(out_mp4)) {
    throw CodecError("encoder failed (exit " + std::to_string(r.exit_code) + "): " + r.output);
  }
  return out_mp4;
}

/// Decodes a video file via `$VBVR_DECODER <in_file> <out_frames_dir>`, or
/// reads a frames/ directory directly when given one.
inline FrameSequence decode_video(const fs::path& in) {
  if (fs::is_directory(in)) return read_frames_dir(in);
  if (!fs::exists(in)) throw CodecError("no such video: " + in.string());
  const char* tool = configured_decoder();
  if (tool == nullptr || *tool == '\0') {
    throw CodecError("VBVR_DECODER is not configured and input is not a frames directory");
  }
  const fs::path tmp = video_detail::make_temp_dir("dec");
  const std::string cmd =
      std::string(tool) + " " + video_detail::quoted(in) + " " + video_detail::quoted(tmp);
  const auto r = video_detail::run_tool(cmd);
  if (r.exit_code != 0) {
    fs::remove_all(tmp);
    throw CodecError("decoder failed (exit " + std::to_string(r.exit_code) + "): " + r.output);
  }
  FrameSequence seq = read_frames_dir(tmp);
  fs::remove_all(tmp);
  return seq;
}

}  // namespace vbvr::render
