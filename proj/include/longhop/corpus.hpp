#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace longhop {

// A word is a maximal run of non-whitespace characters, with whitespace
// taken from the Unicode whitespace classes (UTF-8 aware).
std::vector<std::string_view> split_words(std::string_view text);
std::size_t count_words(std::string_view text);

// Collapses every whitespace run to a single space and trims the ends.
// Idempotent.
std::string normalize_whitespace(std::string_view text);

// A long input context.
struct Document {
  std::string id;
  std::string text;
  std::size_t word_count = 0;

  static Document from_text(std::string id, std::string text);
};

// A contiguous word segment of one document. `index` is the zero-based
// ordinal within the document; indexes are contiguous per document.
struct Chunk {
  std::string doc_id;
  std::size_t index = 0;
  std::string text;  // words joined by single spaces
  std::size_t word_count = 0;
};

// Chunks of one or more documents, in original context order. Immutable
// after construction and shareable across threads.
struct ChunkedCorpus {
  std::vector<Chunk> chunks;
  std::size_t chunk_size = 0;
};

// Splits a document into ceil(word_count / chunk_size) chunks. Every chunk
// holds exactly chunk_size words except possibly the last one. An empty or
// all-whitespace document yields zero chunks.
std::vector<Chunk> chunk_document(const Document& doc, std::size_t chunk_size);

ChunkedCorpus chunk_corpus(const std::vector<Document>& docs, std::size_t chunk_size);

}  // namespace longhop
