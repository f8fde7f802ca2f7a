#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbvr/core/error.hpp"
#include "vbvr/core/params.hpp"
#include "vbvr/core/task.hpp"

namespace vbvr::gen {

struct RubricDim {
  std::string name;
  double weight = 0;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Declarative half of a task family: parameter ranges, difficulty strata,
/// prompt template, and rubric weights. One config file per family mirrors
/// this struct; the procedural half (scene building, solving, checking)
/// lives in the family generator class.
struct FamilySpec {
  TaskId task;
  int num_strata = 3;
  std::map<std::string, IntRange> int_ranges;
  std::map<std::string, std::vector<std::string>> enum_options;
  std::string prompt_template;
  std::vector<RubricDim> rubric;

  Json to_json() const {
    Json j;
    j["code"] = task.family_code;
    j["faculty"] = std::string(to_string(task.faculty));
    j["strata"] = num_strata;
    j["ranges"] = Json::object();
    for (const auto& [name, r] : int_ranges) j["ranges"][name] = Json::array({r.lo, r.hi});
    j["enums"] = Json::object();
    for (const auto& [name, opts] : enum_options) j["enums"][name] = opts;
    j["prompt_template"] = prompt_template;
    j["rubric"] = Json::array();
    for (const auto& d : rubric) j["rubric"].push_back({{"name", d.name}, {"weight", d.weight}});
    return j;
  }

  static FamilySpec from_json(const Json& j) {
    FamilySpec s;
    s.task.family_code = j.at("code").get<std::string>();
    s.task.faculty = faculty_from_string(j.at("faculty").get<std::string>());
    s.num_strata = j.at("strata").get<int>();
    for (auto it = j.at("ranges").begin(); it != j.at("ranges").end(); ++it) {
      s.int_ranges[it.key()] = IntRange{it.value()[0].get<std::int64_t>(),
                                        it.value()[1].get<std::int64_t>()};
    }
    for (auto it = j.at("enums").begin(); it != j.at("enums").end(); ++it) {
      s.enum_options[it.key()] = it.value().get<std::vector<std::string>>();
    }
    s.prompt_template = j.at("prompt_template").get<std::string>();
    for (const auto& d : j.at("rubric")) {
      s.rubric.push_back(RubricDim{d.at("name").get<std::string>(), d.at("weight").get<double>()});
    }
    return s;
  }

  /// Declared-range check used by the parameter_bounds validation flag.
  bool check_bounds(const ParamAssignment& p, std::string& why) const {
    for (const auto& [name, range] : int_ranges) {
      if (!p.has(name)) {
        why = "missing declared parameter: " + name;
        return false;
      }
      const auto v = p.get_int(name);
      if (v < range.lo || v > range.hi) {
        why = "parameter out of range: " + name + "=" + std::to_string(v);
        return false;
      }
    }
    for (const auto& [name, options] : enum_options) {
      if (!p.has(name)) {
        why = "missing declared parameter: " + name;
        return false;
      }
      const auto& v = p.get_str(name);
      bool ok = false;
      for (const auto& o : options) ok = ok || o == v;
      if (!ok) {
        why = "parameter outside enumeration: " + name + "=" + v;
        return false;
      }
    }
    if (p.difficulty_stratum < 0 || p.difficulty_stratum >= num_strata) {
      why = "difficulty_stratum out of range";
      return false;
    }
    return true;
  }
};

}  // namespace vbvr::gen
