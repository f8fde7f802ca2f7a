#pragma once

#include <cstdint>

#include "vbvr/core/digest.hpp"
#include "vbvr/core/error.hpp"
#include "vbvr/core/task.hpp"

namespace vbvr {

inline constexpr std::uint64_t kSplitCapacity = 1ULL << 32;

inline constexpr std::uint64_t split_base(SplitTag split) {
  switch (split) {
    case SplitTag::Train: return 0;
    case SplitTag::TestInDomain: return 1ULL << 32;
    case SplitTag::TestOutOfDomain: return 1ULL << 33;
  }
  return 0;
}

/// Stateless seed derivation: stable_hash64(family) XOR (split_base + index).
/// XOR with a fixed word is a bijection, so for one task the three split
/// ranges [0,2^32), [2^32,2^33), [2^33,2^33+2^32) stay disjoint and every
/// (split, index) pair maps to a distinct seed.
inline std::uint64_t derive_seed(const TaskId& task, SplitTag split, std::uint64_t index) {
  if (index >= kSplitCapacity) throw RangeError("seed index exhausts the per-split range");
  return fnv1a64(task.family_code) ^ (split_base(split) + index);
}

/// Deterministic retry sub-seed: attempt steps the seed by 2^48.
inline std::uint64_t retry_seed(std::uint64_t seed, int attempt) {
  return seed + (1ULL << 48) * static_cast<std::uint64_t>(attempt);
}

}  // namespace vbvr
