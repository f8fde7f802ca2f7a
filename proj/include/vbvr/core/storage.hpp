#pragma once

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbvr/core/digest.hpp"
#include "vbvr/core/error.hpp"
#include "vbvr/core/sample.hpp"
#include "vbvr/core/seed.hpp"
#include "vbvr/render/png.hpp"
#include "vbvr/render/video.hpp"

namespace vbvr {

namespace fs = std::filesystem;
using OrderedJson = nlohmann::ordered_json;

inline std::string index_dir_name(std::uint64_t index) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%05llu", static_cast<unsigned long long>(index));
  return buf;
}

/// <root>/<family>/<split>/<index>/
inline fs::path sample_dir(const fs::path& root, const std::string& family, SplitTag split,
                           std::uint64_t index) {
  return root / family / std::string(to_string(split)) / index_dir_name(index);
}

/// manifest.json is the single source of symbolic truth; the frames are
/// derived artifacts. Field set and order are part of the on-disk format.
inline OrderedJson build_manifest(const Sample& s, const std::string& digest_first,
                                  const std::string& digest_final,
                                  const std::string& digest_video) {
  OrderedJson m;
  m["task"] = s.task.family_code;
  m["faculty"] = std::string(to_string(s.task.faculty));
  m["split"] = std::string(to_string(s.split));
  m["seed"] = s.seed;
  m["index"] = s.index;
  m["params"] = to_json(s.params);
  m["solution"] = OrderedJson::object();
  m["solution"]["states"] = s.solution.states;
  m["solution"]["frames_per_step"] = s.solution.frames_per_step;
  m["digests"] = OrderedJson::object();
  m["digests"]["first"] = digest_first;
  m["digests"]["final"] = digest_final;
  m["digests"]["video"] = digest_video;
  return m;
}

struct Manifest {
  TaskId task;
  SplitTag split = SplitTag::Train;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  ParamAssignment params;
  std::vector<Json> states;
  int frames_per_step = kDefaultFramesPerStep;
  std::string digest_first, digest_final, digest_video;
};

inline Manifest parse_manifest(const Json& j) {
  Manifest m;
  m.task.family_code = j.at("task").get<std::string>();
  m.task.faculty = faculty_from_string(j.at("faculty").get<std::string>());
  m.split = split_from_string(j.at("split").get<std::string>());
  m.seed = j.at("seed").get<std::uint64_t>();
  m.index = j.at("index").get<std::uint64_t>();
  m.params = params_from_json(j.at("params"));
  for (const auto& s : j.at("solution").at("states")) m.states.push_back(s);
  m.frames_per_step = j.at("solution").at("frames_per_step").get<int>();
  m.digest_first = j.at("digests").at("first").get<std::string>();
  m.digest_final = j.at("digests").at("final").get<std::string>();
  m.digest_video = j.at("digests").at("video").get<std::string>();
  return m;
}

inline Manifest read_manifest(const fs::path& sample_directory) {
  std::ifstream in(sample_directory / "manifest.json");
  if (!in) throw StorageError("missing manifest: " + sample_directory.string());
  Json j;
  in >> j;
  return parse_manifest(j);
}

namespace storage_detail {

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StorageError("cannot read: " + p.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw StorageError("cannot write: " + p.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw StorageError("short write: " + p.string());
}

/// Video bytes in digest order: the mp4 when present, else the frames/ PNGs
/// in index order.
inline std::vector<std::string> video_byte_chunks(const fs::path& dir) {
  std::vector<std::string> chunks;
  if (fs::exists(dir / "ground_truth.mp4")) {
    chunks.push_back(read_file(dir / "ground_truth.mp4"));
    return chunks;
  }
  const fs::path frames = dir / "frames";
  if (!fs::is_directory(frames)) throw StorageError("sample has no video component: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(frames)) {
    if (e.path().extension() == ".png") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) chunks.push_back(read_file(f));
  return chunks;
}

}  // namespace storage_detail

/// Digest over every byte of a written sample directory, in the fixed order
/// first_frame.png, prompt.txt, final_frame.png, video bytes, manifest.json.
inline std::string sample_dir_digest(const fs::path& dir) {
  using storage_detail::read_file;
  Sha256 h;
  h.update(read_file(dir / "first_frame.png"));
  h.update(read_file(dir / "prompt.txt"));
  h.update(read_file(dir / "final_frame.png"));
  for (const auto& chunk : storage_detail::video_byte_chunks(dir)) h.update(chunk);
  h.update(read_file(dir / "manifest.json"));
  auto d = h.finish();
  return to_hex(d);
}

/// Writes the four-component sample directory plus manifest.json, atomically
/// (rename of a staged directory). Re-writing an identical sample is a no-op
/// returning the same digest; a pre-existing directory with different bytes
/// raises ConflictError.
inline std::string write_sample(const Sample& s, const fs::path& root) {
  static std::atomic<unsigned> stage_counter{0};
  const fs::path dir = sample_dir(root, s.task.family_code, s.split, s.index);
  const fs::path stage = dir.parent_path() / (".stage-" + index_dir_name(s.index) + "-" +
                                              std::to_string(::getpid()) + "-" +
                                              std::to_string(stage_counter.fetch_add(1)));
  std::error_code ec;
  fs::create_directories(stage, ec);
  if (ec) throw StorageError("cannot create " + stage.string() + ": " + ec.message());

  try {
    const std::string first_bytes = render::encode_png(s.first_frame);
    const std::string final_bytes = render::encode_png(s.final_frame);
    storage_detail::write_file(stage / "first_frame.png", first_bytes);
    storage_detail::write_file(stage / "prompt.txt", s.prompt);
    storage_detail::write_file(stage / "final_frame.png", final_bytes);

    const fs::path video_out = render::encode_video(s.gt_frames, stage / "ground_truth.mp4");
    Sha256 vh;
    for (const auto& chunk : storage_detail::video_byte_chunks(stage)) vh.update(chunk);
    const auto vd = vh.finish();

    const OrderedJson manifest = build_manifest(s, sha256_hex(first_bytes),
                                                sha256_hex(final_bytes), to_hex(vd));
    storage_detail::write_file(stage / "manifest.json", manifest.dump(2) + "\n");
    (void)video_out;
  } catch (...) {
    fs::remove_all(stage, ec);
    throw;
  }

  const std::string digest = sample_dir_digest(stage);

  if (fs::exists(dir)) {
    std::string existing;
    try {
      existing = sample_dir_digest(dir);
    } catch (const Error&) {
      existing = "<unreadable>";
    }
    fs::remove_all(stage, ec);
    if (existing != digest) {
      throw ConflictError("sample exists with different digest: " + dir.string());
    }
    return digest;
  }

  fs::rename(stage, dir, ec);
  if (ec) {
    // lost a race: someone renamed first; fall back to the digest comparison
    if (fs::exists(dir)) {
      const std::string existing = sample_dir_digest(dir);
      fs::remove_all(stage, ec);
      if (existing != digest) {
        throw ConflictError("sample exists with different digest: " + dir.string());
      }
      return digest;
    }
    throw StorageError("rename failed: " + dir.string());
  }
  return digest;
}

/// Every sample directory under the root, in deterministic path order.
inline std::vector<fs::path> list_sample_dirs(const fs::path& root) {
  std::vector<fs::path> out;
  if (!fs::is_directory(root)) return out;
  for (const auto& fam : fs::directory_iterator(root)) {
    if (!fam.is_directory()) continue;
    for (const auto& split : fs::directory_iterator(fam.path())) {
      if (!split.is_directory()) continue;
      for (const auto& idx : fs::directory_iterator(split.path())) {
        if (idx.is_directory() && fs::exists(idx.path() / "manifest.json")) {
          out.push_back(idx.path());
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vbvr
