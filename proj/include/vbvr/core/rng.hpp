#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vbvr {

/// Seeded random source with portable derived draws.
///
/// mt19937_64 output is pinned by the standard, but the std distributions are
/// not, so every bounded draw here is mapped by hand. Identical seeds produce
/// identical streams on every platform/compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive. Lemire multiply-shift mapping
  /// without rejection; bias is < 2^-64 per draw, irrelevant here, and the
  /// draw count per sample stays fixed, which keeps streams aligned.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t x = engine_();
    const unsigned __int128 m = static_cast<unsigned __int128>(x) * span;
    return lo + static_cast<std::int64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

  bool chance(double p) { return uniform_real() < p; }

  /// Fisher-Yates with portable index draws.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vbvr
