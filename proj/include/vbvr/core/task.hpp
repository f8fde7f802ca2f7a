#pragma once

#include <array>
#include <string>
#include <string_view>

#include "vbvr/core/error.hpp"

namespace vbvr {

enum class Faculty { Abstraction, Knowledge, Perception, Spatiality, Transformation };

inline constexpr std::array<Faculty, 5> kAllFaculties = {
    Faculty::Abstraction, Faculty::Knowledge, Faculty::Perception,
    Faculty::Spatiality, Faculty::Transformation};

inline std::string_view to_string(Faculty f) {
  switch (f) {
    case Faculty::Abstraction: return "Abstraction";
    case Faculty::Knowledge: return "Knowledge";
    case Faculty::Perception: return "Perception";
    case Faculty::Spatiality: return "Spatiality";
    case Faculty::Transformation: return "Transformation";
  }
  throw Error("bad faculty");
}

inline Faculty faculty_from_string(std::string_view s) {
  for (Faculty f : kAllFaculties) {
    if (to_string(f) == s) return f;
  }
  throw Error("unknown faculty: " + std::string(s));
}

/// Task family identity: code like "G-15" plus its taxonomy faculty.
struct TaskId {
  std::string family_code;
  Faculty faculty = Faculty::Spatiality;

  friend bool operator==(const TaskId&, const TaskId&) = default;
};

/// A family code is letter(s)-dash-number, e.g. "G-15", "O-47".
inline bool valid_family_code(std::string_view code) {
  const auto dash = code.find('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 >= code.size()) return false;
  for (char c : code.substr(0, dash)) {
    if (c < 'A' || c > 'Z') return false;
  }
  for (char c : code.substr(dash + 1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

enum class SplitTag { Train, TestInDomain, TestOutOfDomain };

inline constexpr std::array<SplitTag, 3> kAllSplits = {
    SplitTag::Train, SplitTag::TestInDomain, SplitTag::TestOutOfDomain};

// CLI / path spellings.
inline std::string_view to_string(SplitTag s) {
  switch (s) {
    case SplitTag::Train: return "train";
    case SplitTag::TestInDomain: return "test-id";
    case SplitTag::TestOutOfDomain: return "test-ood";
  }
  throw Error("bad split");
}

inline SplitTag split_from_string(std::string_view s) {
  for (SplitTag t : kAllSplits) {
    if (to_string(t) == s) return t;
  }
  throw Error("unknown split: " + std::string(s) + " (expected train, test-id, or test-ood)");
}

}  // namespace vbvr
