#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace longhop {

// Deterministic RNG for seeded generation. mt19937_64 output is fixed by the
// standard; every derived draw below avoids std::*_distribution, whose
// results differ between standard library implementations.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). Rejection sampling keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n);

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(below(static_cast<std::uint64_t>(n)));
  }

  // Fisher-Yates
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

  std::string uppercase_letters(std::size_t n);
  std::string digit_string(std::size_t n);
  std::string lowercase_word(std::size_t min_len, std::size_t max_len);

private:
  std::mt19937_64 engine_;
};

}  // namespace longhop
