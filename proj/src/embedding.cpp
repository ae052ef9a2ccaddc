#include "longhop/embedding.hpp"

#include <cmath>

#include "longhop/corpus.hpp"
#include "longhop/error.hpp"
#include "longhop/hash.hpp"

namespace longhop {

HashEmbeddingBackend::HashEmbeddingBackend(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) {
    fail(ErrorCode::InvalidConfiguration, "embedding dimension must be at least 1");
  }
}

std::string HashEmbeddingBackend::name() const {
  return "hash-" + std::to_string(dimension_);
}

std::vector<float> HashEmbeddingBackend::embed_one(const std::string& text) const {
  std::vector<float> vec(dimension_, 0.0f);
  double norm_sq = 0.0;
  for (const auto word : split_words(text)) {
    const std::size_t bucket = static_cast<std::size_t>(fnv1a64(word) % dimension_);
    // Incremental |v|^2 update: adding 1 to x contributes 2x + 1.
    norm_sq += 2.0 * vec[bucket] + 1.0;
    vec[bucket] += 1.0f;
  }
  if (norm_sq > 0.0) {
    const float inv = static_cast<float>(1.0 / std::sqrt(norm_sq));
    for (auto& x : vec) {
      x *= inv;
    }
  }
  return vec;
}

std::vector<std::vector<float>> HashEmbeddingBackend::embed(const std::vector<std::string>& texts) {
  std::vector<std::vector<float>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    out.push_back(embed_one(text));
  }
  return out;
}

}  // namespace longhop
