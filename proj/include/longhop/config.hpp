#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "longhop/generation.hpp"

namespace longhop {

// Where generated text / embeddings come from. kind selects the
// implementation: generation "openai" | "scripted", embedding "openai" |
// "hash". Secrets (API keys) are read from the environment, never from
// config files.
struct BackendConfig {
  std::string kind;
  std::string endpoint;     // base URL for remote kinds
  std::string model;        // remote model identifier
  std::string script_path;  // scripted generation only
  bool strict = true;       // scripted: unmatched prompt is an error
  int dimension = 256;      // hash embedding only
};

struct EngineConfig {
  int chunk_size = 80;  // words per chunk (l)
  int top_k = 3;        // retrieval depth (k)
  bool rerank_enabled = false;
  int rerank_pool_size = 10;  // bi-encoder recall depth feeding the reranker
  int max_iterations = 10;    // reasoning loop cap (M)
  int window_budget = 4096;   // target model context window (L), tokens

  GenerationParams generation;
  BackendConfig generation_backend{.kind = "scripted"};
  BackendConfig embedding_backend{.kind = "hash"};

  int parallelism = 4;       // concurrent traces in batch evaluation
  int embed_batch_size = 64;
  std::uint64_t seed = 0;
  int consecutive_failure_limit = 5;  // systemic-outage halt threshold

  // Hard violations throw invalid-configuration; soft issues (window budget
  // headroom) come back as warning strings.
  std::vector<std::string> validate() const;

  nlohmann::json to_json() const;
  static EngineConfig from_json(const nlohmann::json& doc);

  static EngineConfig load_file(const std::filesystem::path& path);
  void save_file(const std::filesystem::path& path) const;
  std::string serialize() const;  // canonical bytes, round-trip stable
};

}  // namespace longhop
