#pragma once

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>

#include "vbvr/core/error.hpp"

namespace vbvr {

/// Streaming SHA-256 (OpenSSL EVP). Used for manifest digests and for the
/// 128-bit duplicate keys (truncated).
class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw Error("sha256 init failed");
    }
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* data, std::size_t len) {
    if (EVP_DigestUpdate(ctx_, data, len) != 1) throw Error("sha256 update failed");
  }
  void update(std::string_view s) { update(s.data(), s.size()); }
  void update(std::span<const std::uint8_t> s) { update(s.data(), s.size()); }

  std::array<std::uint8_t, 32> finish() {
    std::array<std::uint8_t, 32> out{};
    unsigned int n = 0;
    if (EVP_DigestFinal_ex(ctx_, out.data(), &n) != 1 || n != 32) {
      throw Error("sha256 final failed");
    }
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

inline std::array<std::uint8_t, 32> sha256_bytes(std::string_view data) {
  Sha256 h;
  h.update(data);
  return h.finish();
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

inline std::string sha256_hex(std::string_view data) {
  auto d = sha256_bytes(data);
  return to_hex(d);
}

/// 128-bit key as two words; ordered + hashable so it can live in maps/sets.
struct DuplicateKey {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const DuplicateKey&, const DuplicateKey&) = default;

  std::string hex() const {
    std::array<std::uint8_t, 16> b{};
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(hi >> (56 - 8 * i));
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(8 + i)] = static_cast<std::uint8_t>(lo >> (56 - 8 * i));
    return to_hex(b);
  }
};

/// First 128 bits of SHA-256 over the given canonical byte string.
inline DuplicateKey digest128(std::string_view canonical) {
  const auto d = sha256_bytes(canonical);
  DuplicateKey k;
  for (int i = 0; i < 8; ++i) k.hi = (k.hi << 8) | d[static_cast<std::size_t>(i)];
  for (int i = 0; i < 8; ++i) k.lo = (k.lo << 8) | d[static_cast<std::size_t>(8 + i)];
  return k;
}

/// FNV-1a, the stable 64-bit string hash behind seed derivation.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace vbvr
