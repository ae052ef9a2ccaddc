#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "longhop/corpus.hpp"
#include "longhop/embedding.hpp"

namespace longhop {

// Pairwise similarity scorer (cross-encoder shape): higher score = more
// similar. Must be deterministic for identical inputs within one run.
class PairScorer {
public:
  virtual ~PairScorer() = default;
  virtual std::string name() const = 0;
  virtual double score(const std::string& query, const std::string& passage) = 0;
};

struct Hit {
  std::size_t chunk = 0;  // position in ChunkedCorpus::chunks (original order)
  double score = 0.0;
};

// Top-k retrieval result for one query. `hits` is ordered by descending
// score with ties broken by ascending chunk position; `paragraph` is the hit
// chunks' texts joined by single spaces in ascending original order.
struct RetrievedContext {
  std::string query;
  std::vector<Hit> hits;
  std::string paragraph;
};

// Immutable chunk embeddings over a corpus. Safe for concurrent reads.
class ChunkIndex {
public:
  ChunkIndex() = default;
  ChunkIndex(ChunkedCorpus corpus, std::vector<std::vector<float>> vectors,
             std::size_t dimension);

  const ChunkedCorpus& corpus() const { return corpus_; }
  const std::vector<std::vector<float>>& vectors() const { return vectors_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return corpus_.chunks.size(); }

private:
  ChunkedCorpus corpus_;
  std::vector<std::vector<float>> vectors_;
  std::size_t dimension_ = 0;
};

// dot(a,b) / (|a| |b|), accumulated in double.
double cosine_similarity(std::span<const float> a, std::span<const float> b);

// Embeds every chunk in order, batching backend calls.
ChunkIndex build_index(ChunkedCorpus corpus, EmbeddingBackend& backend,
                       std::size_t batch_size = 64);

// Exhaustive cosine scan for the k most similar chunks. Ties broken by the
// lower chunk position. k larger than the corpus saturates to all chunks.
RetrievedContext recall_top_k(const ChunkIndex& index, const std::string& query,
                              std::size_t k, EmbeddingBackend& backend);

// Rescores the hit chunks with `scorer`, keeps the k_final best, and
// reassembles the paragraph in original order.
RetrievedContext rerank(const std::string& query, const RetrievedContext& retrieved,
                        const ChunkIndex& index, PairScorer& scorer,
                        std::size_t k_final);

std::string assemble_paragraph(const ChunkedCorpus& corpus, const std::vector<Hit>& hits);

}  // namespace longhop
