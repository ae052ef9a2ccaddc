#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace longhop {

// Sentence embedding backend (bi-encoder). Implementations must be safe for
// concurrent embed() calls and deterministic for identical input within one
// process run.
class EmbeddingBackend {
public:
  virtual ~EmbeddingBackend() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;

  // One vector per input text, order preserving; every vector has
  // dimension() entries.
  virtual std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) = 0;
};

// Deterministic bag-of-words embedder: each word is hashed (FNV-1a) into one
// of `dimension` buckets and the bucket counts are L2-normalized. Exact and
// portable, so tests get stable expected values without model weights.
class HashEmbeddingBackend final : public EmbeddingBackend {
public:
  explicit HashEmbeddingBackend(std::size_t dimension = 256);

  std::string name() const override;
  std::size_t dimension() const override { return dimension_; }
  std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) override;

  std::vector<float> embed_one(const std::string& text) const;

private:
  std::size_t dimension_;
};

}  // namespace longhop
