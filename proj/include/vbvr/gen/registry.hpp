#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vbvr/gen/families/bounce.hpp"
#include "vbvr/gen/families/digraph_nav.hpp"
#include "vbvr/gen/families/grid_avoid.hpp"
#include "vbvr/gen/families/grid_visit.hpp"
#include "vbvr/gen/families/key_door.hpp"
#include "vbvr/gen/families/rotation.hpp"
#include "vbvr/gen/families/sliding_puzzle.hpp"
#include "vbvr/gen/families/stable_sort.hpp"
#include "vbvr/gen/families/symmetry.hpp"

namespace vbvr::gen {

class FamilyRegistry {
 public:
  FamilyRegistry() {
    add(std::make_unique<StableSortGenerator>());
    add(std::make_unique<GridAvoidGenerator>());
    add(std::make_unique<GridVisitGenerator>());
    add(std::make_unique<DigraphNavGenerator>());
    add(std::make_unique<BounceGenerator>());
    add(std::make_unique<KeyDoorGenerator>());
    add(std::make_unique<SlidingPuzzleGenerator>());
    add(std::make_unique<SymmetryGenerator>());
    add(std::make_unique<RotationGenerator>());
  }

  const FamilyGenerator& at(const std::string& code) const {
    auto it = families_.find(code);
    if (it == families_.end()) throw PlanError("unknown task family: " + code);
    return *it->second;
  }

  bool contains(const std::string& code) const { return families_.count(code) != 0; }

  std::vector<std::string> codes() const {
    std::vector<std::string> out;
    for (const auto& [code, fam] : families_) out.push_back(code);
    return out;
  }

  /// One JSON config per family (ranges, strata, template, rubric weights).
  void write_default_configs(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    for (const auto& [code, fam] : families_) {
      std::ofstream out(dir / (code + ".json"));
      out << fam->spec().to_json().dump(2) << "\n";
    }
  }

  /// Overrides built-in specs from config files found in `dir`.
  void load_configs(const std::filesystem::path& dir) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() != ".json") continue;
      std::ifstream in(entry.path());
      Json j;
      in >> j;
      const auto spec = FamilySpec::from_json(j);
      auto it = families_.find(spec.task.family_code);
      if (it == families_.end()) {
        throw ConfigError("config for unknown family: " + spec.task.family_code);
      }
      it->second->override_spec(spec);
    }
  }

 private:
  void add(std::unique_ptr<FamilyGenerator> fam) {
    families_[fam->spec().task.family_code] = std::move(fam);
  }

  std::map<std::string, std::unique_ptr<FamilyGenerator>> families_;
};

/// Process-wide registry. Families are stateless, so sharing is safe.
inline FamilyRegistry& registry() {
  static FamilyRegistry instance;
  return instance;
}

}  // namespace vbvr::gen
