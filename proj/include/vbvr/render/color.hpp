#pragma once

#include <cstdint>
#include <cstdlib>

namespace vbvr::render {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Working palette. Every pair differs by >= 60 in some channel so a
// 40-per-channel detection tolerance never confuses two elements
// (test_render pins this separation).
inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kGridGray{170, 170, 170};
inline constexpr Rgb kWallGray{90, 90, 90};
inline constexpr Rgb kRed{210, 45, 45};
inline constexpr Rgb kGreen{45, 160, 70};
inline constexpr Rgb kBlue{45, 90, 210};
inline constexpr Rgb kYellow{245, 205, 40};
inline constexpr Rgb kOrange{235, 130, 35};
inline constexpr Rgb kPurple{150, 60, 200};
inline constexpr Rgb kCyan{45, 185, 205};
inline constexpr Rgb kMagenta{215, 70, 170};

inline constexpr Rgb kFillPalette[] = {kRed,    kGreen, kBlue, kYellow,
                                       kOrange, kPurple, kCyan, kMagenta};

inline int max_channel_diff(Rgb a, Rgb b) {
  const int dr = std::abs(int(a.r) - int(b.r));
  const int dg = std::abs(int(a.g) - int(b.g));
  const int db = std::abs(int(a.b) - int(b.b));
  return dr > dg ? (dr > db ? dr : db) : (dg > db ? dg : db);
}

/// Detection predicate: every channel within `tol`.
inline bool color_close(Rgb a, Rgb b, int tol) {
  return std::abs(int(a.r) - int(b.r)) <= tol && std::abs(int(a.g) - int(b.g)) <= tol &&
         std::abs(int(a.b) - int(b.b)) <= tol;
}

}  // namespace vbvr::render
