#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vbvr/core/error.hpp"

namespace vbvr::solvers {

struct SortObject {
  std::string type;   // shape kind, e.g. "circle"
  double size = 0;    // characteristic extent in px; distinct within a type
  std::string color;
  double x = 0;
  double y = 0;
};

struct SortTarget {
  double x = 0;
  double y = 0;
};

/// Target layout for the grouping-and-sorting task: one horizontal line,
/// grouped by type (group order = left-to-right order of each type's
/// leftmost initial instance), ascending size inside a group, uniform gaps,
/// vertically centered. Returns one target center per input object, same
/// indexing as the input.
inline std::vector<SortTarget> stable_sort_layout(const std::vector<SortObject>& objects,
                                                  double canvas, double gap = 24) {
  if (objects.size() != 6) throw InvalidInputError("expected exactly 6 objects");
  std::map<std::string, std::vector<std::size_t>> by_type;
  for (std::size_t i = 0; i < objects.size(); ++i) by_type[objects[i].type].push_back(i);
  if (by_type.size() != 2) throw InvalidInputError("expected exactly 2 object types");

  std::vector<std::string> group_order;
  {
    std::vector<std::pair<double, std::string>> leftmost;
    for (const auto& [type, idxs] : by_type) {
      if (idxs.size() != 3) throw InvalidInputError("expected 3 objects per type");
      double mn = objects[idxs[0]].x;
      for (std::size_t i : idxs) mn = std::min(mn, objects[i].x);
      leftmost.emplace_back(mn, type);
    }
    std::sort(leftmost.begin(), leftmost.end());
    for (const auto& [x, type] : leftmost) group_order.push_back(type);
  }

  std::vector<std::size_t> slot_to_object;
  for (const auto& type : group_order) {
    auto idxs = by_type[type];
    std::set<double> sizes;
    for (std::size_t i : idxs) sizes.insert(objects[i].size);
    if (sizes.size() != idxs.size()) {
      throw InvalidInputError("duplicate sizes within type: " + type);
    }
    std::sort(idxs.begin(), idxs.end(), [&objects](std::size_t a, std::size_t b) {
      return objects[a].size < objects[b].size;
    });
    slot_to_object.insert(slot_to_object.end(), idxs.begin(), idxs.end());
  }

  double total = gap * static_cast<double>(slot_to_object.size() - 1);
  for (std::size_t i : slot_to_object) total += objects[i].size;
  double pen = (canvas - total) / 2;

  std::vector<SortTarget> targets(objects.size());
  for (std::size_t i : slot_to_object) {
    targets[i] = SortTarget{pen + objects[i].size / 2, canvas / 2};
    pen += objects[i].size + gap;
  }
  return targets;
}

}  // namespace vbvr::solvers
