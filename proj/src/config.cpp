#include "longhop/config.hpp"

#include <fstream>
#include <set>

#include "longhop/error.hpp"

namespace longhop {

namespace {

void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (known.find(key) == known.end()) {
      fail(ErrorCode::InvalidConfiguration, "unknown config field '" + key + "' in " + where);
    }
  }
}

nlohmann::json backend_to_json(const BackendConfig& b) {
  return nlohmann::json{
      {"kind", b.kind},         {"endpoint", b.endpoint}, {"model", b.model},
      {"script_path", b.script_path}, {"strict", b.strict},     {"dimension", b.dimension},
  };
}

BackendConfig backend_from_json(const nlohmann::json& obj, const std::string& where) {
  if (!obj.is_object()) {
    fail(ErrorCode::InvalidConfiguration, where + " must be an object");
  }
  reject_unknown_keys(obj, {"kind", "endpoint", "model", "script_path", "strict", "dimension"},
                      where);
  BackendConfig b;
  b.kind = obj.value("kind", b.kind);
  b.endpoint = obj.value("endpoint", b.endpoint);
  b.model = obj.value("model", b.model);
  b.script_path = obj.value("script_path", b.script_path);
  b.strict = obj.value("strict", b.strict);
  b.dimension = obj.value("dimension", b.dimension);
  return b;
}

}  // namespace

std::vector<std::string> EngineConfig::validate() const {
  if (chunk_size < 1) {
    fail(ErrorCode::InvalidConfiguration, "chunk_size must be at least 1");
  }
  if (top_k < 1) {
    fail(ErrorCode::InvalidConfiguration, "top_k must be at least 1");
  }
  if (max_iterations < 1) {
    fail(ErrorCode::InvalidConfiguration, "max_iterations must be at least 1");
  }
  if (parallelism < 1) {
    fail(ErrorCode::InvalidConfiguration, "parallelism must be at least 1");
  }
  if (embed_batch_size < 1) {
    fail(ErrorCode::InvalidConfiguration, "embed_batch_size must be at least 1");
  }
  if (consecutive_failure_limit < 1) {
    fail(ErrorCode::InvalidConfiguration, "consecutive_failure_limit must be at least 1");
  }
  if (rerank_enabled && rerank_pool_size < top_k) {
    fail(ErrorCode::InvalidConfiguration, "rerank_pool_size must be at least top_k");
  }
  if (generation.temperature < 0.0) {
    fail(ErrorCode::InvalidConfiguration, "temperature must be non-negative");
  }

  std::vector<std::string> warnings;
  // Rough prompt-scaffolding allowance on top of the retrieved words.
  const long long retrieved_words = static_cast<long long>(chunk_size) * top_k;
  if (retrieved_words + 512 > window_budget) {
    warnings.push_back("chunk_size * top_k = " + std::to_string(retrieved_words) +
                       " words leaves little headroom under the window budget of " +
                       std::to_string(window_budget) + " tokens");
  }
  return warnings;
}

nlohmann::json EngineConfig::to_json() const {
  return nlohmann::json{
      {"chunk_size", chunk_size},
      {"top_k", top_k},
      {"rerank_enabled", rerank_enabled},
      {"rerank_pool_size", rerank_pool_size},
      {"max_iterations", max_iterations},
      {"window_budget", window_budget},
      {"generation",
       {{"max_new_tokens", generation.max_new_tokens},
        {"temperature", generation.temperature},
        {"stop_sequences", generation.stop_sequences}}},
      {"generation_backend", backend_to_json(generation_backend)},
      {"embedding_backend", backend_to_json(embedding_backend)},
      {"parallelism", parallelism},
      {"embed_batch_size", embed_batch_size},
      {"seed", seed},
      {"consecutive_failure_limit", consecutive_failure_limit},
  };
}

EngineConfig EngineConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    fail(ErrorCode::InvalidConfiguration, "config must be a JSON object");
  }
  reject_unknown_keys(doc,
                      {"chunk_size", "top_k", "rerank_enabled", "rerank_pool_size",
                       "max_iterations", "window_budget", "generation", "generation_backend",
                       "embedding_backend", "parallelism", "embed_batch_size", "seed",
                       "consecutive_failure_limit"},
                      "config");
  EngineConfig cfg;
  cfg.chunk_size = doc.value("chunk_size", cfg.chunk_size);
  cfg.top_k = doc.value("top_k", cfg.top_k);
  cfg.rerank_enabled = doc.value("rerank_enabled", cfg.rerank_enabled);
  cfg.rerank_pool_size = doc.value("rerank_pool_size", cfg.rerank_pool_size);
  cfg.max_iterations = doc.value("max_iterations", cfg.max_iterations);
  cfg.window_budget = doc.value("window_budget", cfg.window_budget);
  if (doc.contains("generation")) {
    const auto& gen = doc.at("generation");
    reject_unknown_keys(gen, {"max_new_tokens", "temperature", "stop_sequences"}, "generation");
    cfg.generation.max_new_tokens = gen.value("max_new_tokens", cfg.generation.max_new_tokens);
    cfg.generation.temperature = gen.value("temperature", cfg.generation.temperature);
    cfg.generation.stop_sequences =
        gen.value("stop_sequences", cfg.generation.stop_sequences);
  }
  if (doc.contains("generation_backend")) {
    cfg.generation_backend = backend_from_json(doc.at("generation_backend"), "generation_backend");
  }
  if (doc.contains("embedding_backend")) {
    cfg.embedding_backend = backend_from_json(doc.at("embedding_backend"), "embedding_backend");
  }
  cfg.parallelism = doc.value("parallelism", cfg.parallelism);
  cfg.embed_batch_size = doc.value("embed_batch_size", cfg.embed_batch_size);
  cfg.seed = doc.value("seed", cfg.seed);
  cfg.consecutive_failure_limit =
      doc.value("consecutive_failure_limit", cfg.consecutive_failure_limit);
  return cfg;
}

std::string EngineConfig::serialize() const { return to_json().dump(2) + "\n"; }

EngineConfig EngineConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::Io, "cannot open config file: " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(ErrorCode::InvalidConfiguration,
         "cannot parse config file " + path.string() + ": " + e.what());
  }
  return from_json(doc);
}

void EngineConfig::save_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::Io, "cannot write config file: " + path.string());
  }
  out << serialize();
}

}  // namespace longhop
