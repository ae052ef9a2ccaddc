#include "longhop/corpus.hpp"

#include "longhop/error.hpp"

namespace longhop {

namespace {

bool is_whitespace_codepoint(char32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Decodes the UTF-8 sequence at `pos`; returns the codepoint and advances
// `pos`. Invalid bytes are consumed one at a time and treated as
// non-whitespace.
char32_t next_codepoint(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char b0 = byte(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + len > text.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += len;
  return cp;
}

}  // namespace

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  std::size_t word_start = 0;
  bool in_word = false;
  while (pos < text.size()) {
    const std::size_t at = pos;
    const char32_t cp = next_codepoint(text, pos);
    if (is_whitespace_codepoint(cp)) {
      if (in_word) {
        words.push_back(text.substr(word_start, at - word_start));
        in_word = false;
      }
    } else if (!in_word) {
      word_start = at;
      in_word = true;
    }
  }
  if (in_word) {
    words.push_back(text.substr(word_start));
  }
  return words;
}

std::size_t count_words(std::string_view text) {
  return split_words(text).size();
}

std::string normalize_whitespace(std::string_view text) {
  const auto words = split_words(text);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out.append(words[i]);
  }
  return out;
}

Document Document::from_text(std::string id, std::string text) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(text);
  doc.word_count = count_words(doc.text);
  return doc;
}

std::vector<Chunk> chunk_document(const Document& doc, std::size_t chunk_size) {
  if (chunk_size == 0) {
    fail(ErrorCode::InvalidConfiguration, "chunk_size must be at least 1");
  }
  const auto words = split_words(doc.text);
  std::vector<Chunk> chunks;
  chunks.reserve((words.size() + chunk_size - 1) / chunk_size);
  for (std::size_t start = 0; start < words.size(); start += chunk_size) {
    const std::size_t end = std::min(start + chunk_size, words.size());
    Chunk chunk;
    chunk.doc_id = doc.id;
    chunk.index = chunks.size();
    chunk.word_count = end - start;
    std::size_t bytes = 0;
    for (std::size_t i = start; i < end; ++i) {
      bytes += words[i].size() + 1;
    }
    chunk.text.reserve(bytes);
    for (std::size_t i = start; i < end; ++i) {
      if (i > start) {
        chunk.text.push_back(' ');
      }
      chunk.text.append(words[i]);
    }
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

ChunkedCorpus chunk_corpus(const std::vector<Document>& docs, std::size_t chunk_size) {
  ChunkedCorpus corpus;
  corpus.chunk_size = chunk_size;
  for (const auto& doc : docs) {
    auto chunks = chunk_document(doc, chunk_size);
    for (auto& chunk : chunks) {
      corpus.chunks.push_back(std::move(chunk));
    }
  }
  return corpus;
}

}  // namespace longhop
