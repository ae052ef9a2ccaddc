#include "longhop/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "longhop/error.hpp"

namespace longhop {

namespace {

// Descending score, ties broken by the earlier chunk.
bool ranks_before(const Hit& a, const Hit& b) {
  if (a.score != b.score) {
    return a.score > b.score;
  }
  return a.chunk < b.chunk;
}

}  // namespace

ChunkIndex::ChunkIndex(ChunkedCorpus corpus, std::vector<std::vector<float>> vectors,
                       std::size_t dimension)
    : corpus_(std::move(corpus)), vectors_(std::move(vectors)), dimension_(dimension) {
  if (vectors_.size() != corpus_.chunks.size()) {
    fail(ErrorCode::ShapeMismatch,
         "index has " + std::to_string(vectors_.size()) + " vectors for " +
             std::to_string(corpus_.chunks.size()) + " chunks");
  }
  for (const auto& v : vectors_) {
    if (v.size() != dimension_) {
      fail(ErrorCode::ShapeMismatch, "index vector has wrong dimension");
    }
  }
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::ShapeMismatch,
         "cosine_similarity: dimensions differ (" + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()) + ")");
  }
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    norm_a += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    norm_b += static_cast<double>(b[i]) * static_cast<double>(b[i]);
  }
  if (norm_a == 0.0 || norm_b == 0.0) {
    fail(ErrorCode::DegenerateInput, "cosine_similarity: zero vector");
  }
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

ChunkIndex build_index(ChunkedCorpus corpus, EmbeddingBackend& backend,
                       std::size_t batch_size) {
  if (batch_size == 0) {
    fail(ErrorCode::InvalidConfiguration, "embedding batch_size must be at least 1");
  }
  std::vector<std::vector<float>> vectors;
  vectors.reserve(corpus.chunks.size());
  for (std::size_t start = 0; start < corpus.chunks.size(); start += batch_size) {
    const std::size_t end = std::min(start + batch_size, corpus.chunks.size());
    std::vector<std::string> batch;
    batch.reserve(end - start);
    for (std::size_t i = start; i < end; ++i) {
      batch.push_back(corpus.chunks[i].text);
    }
    std::vector<std::vector<float>> embedded;
    try {
      embedded = backend.embed(batch);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      fail(ErrorCode::RetrievalBackend,
           "embedding backend failed on chunks [" + std::to_string(start) + ", " +
               std::to_string(end) + "): " + e.what());
    }
    if (embedded.size() != batch.size()) {
      fail(ErrorCode::RetrievalBackend,
           "embedding backend returned " + std::to_string(embedded.size()) +
               " vectors for a batch of " + std::to_string(batch.size()) +
               " (chunks [" + std::to_string(start) + ", " + std::to_string(end) + "))");
    }
    for (auto& v : embedded) {
      if (v.size() != backend.dimension()) {
        fail(ErrorCode::RetrievalBackend, "embedding backend returned a wrong-sized vector");
      }
      vectors.push_back(std::move(v));
    }
  }
  return ChunkIndex(std::move(corpus), std::move(vectors), backend.dimension());
}

std::string assemble_paragraph(const ChunkedCorpus& corpus, const std::vector<Hit>& hits) {
  std::vector<std::size_t> positions;
  positions.reserve(hits.size());
  for (const auto& hit : hits) {
    positions.push_back(hit.chunk);
  }
  std::sort(positions.begin(), positions.end());
  std::string paragraph;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) {
      paragraph.push_back(' ');
    }
    paragraph.append(corpus.chunks[positions[i]].text);
  }
  return paragraph;
}

RetrievedContext recall_top_k(const ChunkIndex& index, const std::string& query,
                              std::size_t k, EmbeddingBackend& backend) {
  if (k == 0) {
    fail(ErrorCode::InvalidConfiguration, "recall_top_k: k must be at least 1");
  }
  RetrievedContext result;
  result.query = query;
  if (index.size() == 0) {
    return result;
  }

  std::vector<float> query_vec;
  try {
    auto embedded = backend.embed({query});
    if (embedded.size() != 1) {
      fail(ErrorCode::RetrievalBackend, "embedding backend returned no vector for the query");
    }
    query_vec = std::move(embedded.front());
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::RetrievalBackend, std::string("query embedding failed: ") + e.what());
  }

  // Bounded selection: min-heap (per rank order) of the best k seen so far.
  const auto cmp = ranks_before;
  std::priority_queue<Hit, std::vector<Hit>, decltype(cmp)> heap(cmp);
  for (std::size_t i = 0; i < index.size(); ++i) {
    Hit hit{i, cosine_similarity(query_vec, index.vectors()[i])};
    if (heap.size() < k) {
      heap.push(hit);
    } else if (ranks_before(hit, heap.top())) {
      heap.pop();
      heap.push(hit);
    }
  }

  result.hits.resize(heap.size());
  for (std::size_t i = heap.size(); i-- > 0;) {
    result.hits[i] = heap.top();
    heap.pop();
  }
  result.paragraph = assemble_paragraph(index.corpus(), result.hits);
  return result;
}

RetrievedContext rerank(const std::string& query, const RetrievedContext& retrieved,
                        const ChunkIndex& index, PairScorer& scorer,
                        std::size_t k_final) {
  if (k_final == 0 || k_final > retrieved.hits.size()) {
    fail(ErrorCode::Precondition,
         "rerank: k_final must be in [1, " + std::to_string(retrieved.hits.size()) + "]");
  }
  std::vector<Hit> rescored;
  rescored.reserve(retrieved.hits.size());
  for (const auto& hit : retrieved.hits) {
    double s = 0.0;
    try {
      s = scorer.score(query, index.corpus().chunks[hit.chunk].text);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      fail(ErrorCode::RetrievalBackend, std::string("pair scorer failed: ") + e.what());
    }
    rescored.push_back(Hit{hit.chunk, s});
  }
  std::sort(rescored.begin(), rescored.end(), ranks_before);
  rescored.resize(k_final);

  RetrievedContext result;
  result.query = query;
  result.hits = std::move(rescored);
  result.paragraph = assemble_paragraph(index.corpus(), result.hits);
  return result;
}

}  // namespace longhop
