#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace longhop {

// FNV-1a, 64-bit. Stable across platforms and runs; used for prompt digests,
// pinned asset checks, and the bag-of-words test embedder.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  return h;
}

// 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace longhop
