#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>

#include "vbvr/core/sample.hpp"
#include "vbvr/core/seed.hpp"
#include "vbvr/core/validate.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/render/animate.hpp"

namespace vbvr::gen {

/// Per-family generation counters, shared across workers.
class GenerationStats {
 public:
  void record(const std::string& family, bool validation_failed) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& e = per_family_[family];
    ++e.attempts;
    if (validation_failed) ++e.validation_failures;
  }

  struct Entry {
    std::uint64_t attempts = 0;
    std::uint64_t validation_failures = 0;
    double failure_rate() const {
      return attempts == 0 ? 0.0 : static_cast<double>(validation_failures) / static_cast<double>(attempts);
    }
  };

  std::map<std::string, Entry> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return per_family_;
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, Entry> per_family_;
};

struct GenerateOptions {
  int frames_per_step = kDefaultFramesPerStep;
  int hold = kDefaultHoldFrames;
  int max_validation_retries = 3;
  DuplicateRegistry* registry = nullptr;  // duplicate criterion off when null
  GenerationStats* stats = nullptr;
};

/// Renders a symbolic trajectory through the family's keyframe projection.
inline render::FrameSequence render_trajectory(const FamilyGenerator& fam,
                                               const ParamAssignment& params,
                                               const Trajectory& traj, int frames_per_step,
                                               int hold) {
  return render::render_keyframes(fam.build_scene(params), fam.keyframes(params, traj),
                                  frames_per_step, hold);
}

/// The generator contract: derive_seed -> sample_parameters -> solve ->
/// prompt -> render -> validate, returning only validated samples. A failed
/// validation retries with the next deterministic sub-seed, at most
/// `max_validation_retries` times.
inline Sample generate(const FamilyGenerator& fam, SplitTag split, std::uint64_t index,
                       const GenerateOptions& opt = {}) {
  const std::uint64_t base_seed = derive_seed(fam.spec().task, split, index);
  const int stratum = static_cast<int>(index % static_cast<std::uint64_t>(fam.spec().num_strata));
  std::string last_failure;

  for (int attempt = 0; attempt <= opt.max_validation_retries; ++attempt) {
    Sample s;
    s.task = fam.spec().task;
    s.split = split;
    s.seed = base_seed;
    s.index = index;

    Rng rng(retry_seed(base_seed, attempt));
    s.params = fam.sample_parameters(rng, stratum);
    s.solution = fam.solve(s.params);
    s.solution.frames_per_step = opt.frames_per_step;
    s.prompt = fam.build_prompt(s.params);
    s.scene = fam.build_scene(s.params);
    s.keyframes = fam.keyframes(s.params, s.solution);
    if (s.keyframes.size() != s.solution.states.size()) {
      throw Error(fam.spec().task.family_code + ": keyframe/state count mismatch");
    }
    s.gt_frames = render::render_keyframes(s.scene, s.keyframes, opt.frames_per_step, opt.hold);
    s.first_frame = s.gt_frames.frames.front();
    s.final_frame = s.gt_frames.frames.back();

    ValidationHooks hooks;
    hooks.checker = [&fam](const Sample& sample, std::string& why) {
      return fam.check(sample, why);
    };
    hooks.bounds_check = [&fam](const ParamAssignment& p, std::string& why) {
      return fam.spec().check_bounds(p, why);
    };
    hooks.registry = opt.registry;
    const auto report = validate_sample(s, hooks);
    if (opt.stats != nullptr) {
      opt.stats->record(fam.spec().task.family_code, !report.pass());
    }
    if (report.pass()) return s;
    last_failure = report.failures.empty() ? "unknown" : report.failures.front();
  }
  throw Error(fam.spec().task.family_code + ": validation failed after retries (" + last_failure +
              ")");
}

}  // namespace vbvr::gen
