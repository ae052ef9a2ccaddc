#include "longhop/rng.hpp"

namespace longhop {

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) {
    return 0;
  }
  // Largest multiple of n that fits in 64 bits; rejection above it.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return x % n;
}

std::string SeededRng::uppercase_letters(std::size_t n) {
  std::string out(n, 'A');
  for (auto& ch : out) {
    ch = static_cast<char>('A' + below(26));
  }
  return out;
}

std::string SeededRng::digit_string(std::size_t n) {
  std::string out(n, '0');
  for (auto& ch : out) {
    ch = static_cast<char>('0' + below(10));
  }
  return out;
}

std::string SeededRng::lowercase_word(std::size_t min_len, std::size_t max_len) {
  const std::size_t len = min_len + index(max_len - min_len + 1);
  std::string out(len, 'a');
  for (auto& ch : out) {
    ch = static_cast<char>('a' + below(26));
  }
  return out;
}

}  // namespace longhop
