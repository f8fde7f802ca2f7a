#pragma once

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "vbvr/core/rng.hpp"
#include "vbvr/core/sample.hpp"
#include "vbvr/core/trajectory.hpp"
#include "vbvr/gen/spec.hpp"
#include "vbvr/render/animate.hpp"

namespace vbvr::gen {

/// Procedural half of a task family. Implementations are pure: every method
/// is a function of its arguments (plus the rng stream for sampling), which
/// is what makes generation safe to parallelize and byte-reproducible.
class FamilyGenerator {
 public:
  virtual ~FamilyGenerator() = default;

  virtual const FamilySpec& spec() const = 0;

  /// Draws a feasible assignment for the stratum. Implementations
  /// rejection-resample against their feasibility predicate and throw
  /// InfeasibleError once kDrawAttemptBudget draws are exhausted.
  virtual ParamAssignment sample_parameters(Rng& rng, int stratum) const = 0;

  virtual Trajectory solve(const ParamAssignment& p) const = 0;
  virtual render::SceneSpec build_scene(const ParamAssignment& p) const = 0;
  virtual std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                                  const Trajectory& t) const = 0;

  /// Solvability checker: accepts the stored solution for this instance.
  /// Kept independent of `solve` wherever the family allows (legality plus
  /// optimal-length comparison rather than sequence equality).
  virtual bool check(const Sample& s, std::string& why) const = 0;

  /// Values spliced into the prompt template beyond the raw parameters
  /// (color names, direction words, composed "10x10" strings).
  virtual std::map<std::string, std::string> prompt_substitutions(const ParamAssignment& p) const {
    (void)p;
    return {};
  }

  std::string build_prompt(const ParamAssignment& p) const;

  /// Allows config files to override ranges / template / rubric weights.
  void override_spec(const FamilySpec& s) { mutable_spec() = s; }

 protected:
  virtual FamilySpec& mutable_spec() = 0;
};

namespace prompt_detail {

inline std::string format_value(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          auto r = std::to_chars(buf, buf + sizeof(buf), x);
          return std::string(buf, r.ptr);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          throw TemplateError("coordinate parameters cannot appear in prompts");
        }
      },
      v);
}

}  // namespace prompt_detail

/// Template instantiation: every {placeholder} must resolve from the
/// substitution map or a scalar parameter; anything left over is an error,
/// so prompts can never ship half-filled.
inline std::string FamilyGenerator::build_prompt(const ParamAssignment& p) const {
  const std::string& tmpl = spec().prompt_template;
  const auto subs = prompt_substitutions(p);
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out.push_back(tmpl[i++]);
      continue;
    }
    const auto close = tmpl.find('}', i);
    if (close == std::string::npos) throw TemplateError("unterminated placeholder in template");
    const std::string name = tmpl.substr(i + 1, close - i - 1);
    if (auto it = subs.find(name); it != subs.end()) {
      out += it->second;
    } else if (auto pit = p.values.find(name); pit != p.values.end()) {
      out += prompt_detail::format_value(pit->second);
    } else {
      throw TemplateError("unfilled placeholder: {" + name + "}");
    }
    i = close + 1;
  }
  return out;
}

}  // namespace vbvr::gen
