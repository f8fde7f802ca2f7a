#pragma once

#include <array>
#include <cstdint>

namespace vbvr::render {

// Embedded 5x7 bitmap glyphs, one byte per row, low 5 bits used (MSB-left).
// Integral scaling keeps text rendering free of platform font stacks.
struct Glyph5x7 {
  std::array<std::uint8_t, 7> rows{};
};

inline const Glyph5x7* lookup_glyph(char c) {
  static constexpr Glyph5x7 kDigits[10] = {
      {{0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}},  // 0
      {{0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}},  // 1
      {{0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F}},  // 2
      {{0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E}},  // 3
      {{0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}},  // 4
      {{0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}},  // 5
      {{0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}},  // 6
      {{0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},  // 7
      {{0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}},  // 8
      {{0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}},  // 9
  };
  static constexpr Glyph5x7 kQuestion{{0x0E, 0x11, 0x01, 0x02, 0x04, 0x00, 0x04}};
  if (c >= '0' && c <= '9') return &kDigits[c - '0'];
  return &kQuestion;
}

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;
inline constexpr int kGlyphAdvance = 6;  // one blank column between glyphs

}  // namespace vbvr::render
