#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/core/task.hpp"

namespace vbvr::gen {

struct PlanEntry {
  std::string family;
  SplitTag split = SplitTag::Train;
  std::uint64_t count = 0;  // indices 0..count-1
};

struct GenerationPlan {
  std::vector<PlanEntry> entries;

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& e : entries) n += e.count;
    return n;
  }
};

/// Dual-split plan: in-domain families receive Train + TestInDomain indices;
/// held-out families receive TestOutOfDomain only, and never any training
/// indices.
inline GenerationPlan build_split_plan(const std::vector<std::string>& families,
                                       std::uint64_t train_per_task, std::uint64_t test_per_task,
                                       const std::set<std::string>& ood_families) {
  if (families.empty()) throw PlanError("plan needs at least one family");
  for (const auto& f : ood_families) {
    if (std::find(families.begin(), families.end(), f) == families.end()) {
      throw PlanError("OOD family not in the family list: " + f);
    }
  }
  GenerationPlan plan;
  for (const auto& f : families) {
    if (ood_families.count(f) != 0) {
      if (test_per_task > 0) plan.entries.push_back({f, SplitTag::TestOutOfDomain, test_per_task});
    } else {
      if (train_per_task > 0) plan.entries.push_back({f, SplitTag::Train, train_per_task});
      if (test_per_task > 0) plan.entries.push_back({f, SplitTag::TestInDomain, test_per_task});
    }
  }
  return plan;
}

}  // namespace vbvr::gen
