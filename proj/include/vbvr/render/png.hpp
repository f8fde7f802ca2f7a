#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "vbvr/core/error.hpp"
#include "vbvr/render/frame.hpp"

namespace vbvr::render {

// Minimal PNG codec over zlib. Encoding is pinned to one filter (Up) and one
// compression level so identical rasters produce identical files; decoding
// accepts any valid 8-bit gray/RGB/RGBA non-interlaced PNG.
namespace png_detail {

inline constexpr int kZlibLevel = 4;

inline void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v >> 24));
  out.push_back(static_cast<char>(v >> 16));
  out.push_back(static_cast<char>(v >> 8));
  out.push_back(static_cast<char>(v));
}

inline std::uint32_t read_u32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
         std::uint32_t(p[3]);
}

inline void put_chunk(std::string& out, const char type[4], const std::string& data) {
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t crc_start = out.size();
  out.append(type, 4);
  out += data;
  const auto crc = crc32(0, reinterpret_cast<const Bytef*>(out.data() + crc_start),
                         static_cast<uInt>(4 + data.size()));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

inline std::string deflate_all(const std::string& raw) {
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::string out(bound, '\0');
  if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound,
                reinterpret_cast<const Bytef*>(raw.data()), static_cast<uLong>(raw.size()),
                kZlibLevel) != Z_OK) {
    throw RenderError("png deflate failed");
  }
  out.resize(bound);
  return out;
}

inline std::string inflate_all(const std::uint8_t* data, std::size_t len, std::size_t expect) {
  std::string out(expect, '\0');
  uLongf out_len = static_cast<uLongf>(expect);
  const int rc = uncompress(reinterpret_cast<Bytef*>(out.data()), &out_len, data,
                            static_cast<uLong>(len));
  if (rc != Z_OK || out_len != expect) throw RenderError("png inflate failed");
  return out;
}

}  // namespace png_detail

inline std::string encode_png(const Frame& f) {
  using namespace png_detail;
  if (f.width <= 0 || f.height <= 0) throw RenderError("empty frame");
  const std::size_t stride = static_cast<std::size_t>(f.width) * 3;

  std::string raw;
  raw.reserve((stride + 1) * static_cast<std::size_t>(f.height));
  std::vector<std::uint8_t> prev(stride, 0);
  for (int y = 0; y < f.height; ++y) {
    const std::uint8_t* row = f.px.data() + static_cast<std::size_t>(y) * stride;
    raw.push_back(2);  // Up filter: flat scenes become near-zero rows
    for (std::size_t i = 0; i < stride; ++i) {
      raw.push_back(static_cast<char>(std::uint8_t(row[i] - prev[i])));
    }
    std::memcpy(prev.data(), row, stride);
  }

  std::string out("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(f.width));
  put_u32(ihdr, static_cast<std::uint32_t>(f.height));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // color type: truecolor
  ihdr.push_back(0);   // compression
  ihdr.push_back(0);   // filter method
  ihdr.push_back(0);   // no interlace
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", deflate_all(raw));
  put_chunk(out, "IEND", "");
  return out;
}

inline Frame decode_png(const std::string& bytes) {
  using namespace png_detail;
  if (bytes.size() < 8 || std::memcmp(bytes.data(), "\x89PNG\r\n\x1a\n", 8) != 0) {
    throw RenderError("not a png");
  }
  const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data());
  std::size_t pos = 8;
  int width = 0, height = 0, color_type = -1;
  std::string idat;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t len = read_u32(p + pos);
    const char* type = bytes.data() + pos + 4;
    const std::size_t data_at = pos + 8;
    if (data_at + len + 4 > bytes.size()) throw RenderError("truncated png chunk");
    if (std::memcmp(type, "IHDR", 4) == 0) {
      width = static_cast<int>(read_u32(p + data_at));
      height = static_cast<int>(read_u32(p + data_at + 4));
      const int bit_depth = p[data_at + 8];
      color_type = p[data_at + 9];
      const int interlace = p[data_at + 12];
      if (bit_depth != 8 || interlace != 0 ||
          (color_type != 0 && color_type != 2 && color_type != 6)) {
        throw RenderError("unsupported png variant");
      }
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.append(bytes, data_at, len);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      break;
    }
    pos = data_at + len + 4;
  }
  if (width <= 0 || height <= 0 || idat.empty()) throw RenderError("bad png structure");

  const int channels = color_type == 0 ? 1 : (color_type == 2 ? 3 : 4);
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  const std::string raw = inflate_all(reinterpret_cast<const std::uint8_t*>(idat.data()),
                                      idat.size(), (stride + 1) * static_cast<std::size_t>(height));

  Frame f(width, height);
  std::vector<std::uint8_t> prev(stride, 0);
  std::vector<std::uint8_t> cur(stride, 0);
  for (int y = 0; y < height; ++y) {
    const auto* src = reinterpret_cast<const std::uint8_t*>(raw.data()) +
                      static_cast<std::size_t>(y) * (stride + 1);
    const int filter = src[0];
    ++src;
    for (std::size_t i = 0; i < stride; ++i) {
      const int a = i >= static_cast<std::size_t>(channels) ? cur[i - channels] : 0;
      const int b = prev[i];
      const int c = i >= static_cast<std::size_t>(channels) ? prev[i - channels] : 0;
      int pred = 0;
      switch (filter) {
        case 0: pred = 0; break;
        case 1: pred = a; break;
        case 2: pred = b; break;
        case 3: pred = (a + b) / 2; break;
        case 4: {
          const int pp = a + b - c;
          const int pa = std::abs(pp - a), pb = std::abs(pp - b), pc = std::abs(pp - c);
          pred = (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
          break;
        }
        default: throw RenderError("bad png filter");
      }
      cur[i] = static_cast<std::uint8_t>((src[i] + pred) & 0xff);
    }
    for (int x = 0; x < width; ++x) {
      Rgb px;
      if (channels == 1) {
        px = Rgb{cur[static_cast<std::size_t>(x)], cur[static_cast<std::size_t>(x)], cur[static_cast<std::size_t>(x)]};
      } else {
        const std::size_t i = static_cast<std::size_t>(x) * channels;
        px = Rgb{cur[i], cur[i + 1], cur[i + 2]};  // alpha, when present, is dropped
      }
      f.set(x, y, px);
    }
    std::swap(prev, cur);
  }
  return f;
}

inline void write_png_file(const std::string& path, const Frame& f) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StorageError("cannot open for write: " + path);
  const std::string bytes = encode_png(f);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw StorageError("short write: " + path);
}

inline Frame read_png_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open for read: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_png(bytes);
}

}  // namespace vbvr::render
