#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

namespace longhop {

struct GenerationParams {
  int max_new_tokens = 512;
  double temperature = 0.0;  // evaluation default
  std::vector<std::string> stop_sequences;
};

// Text generation backend. Implementations must accept concurrent generate
// calls; scripted variants are fully deterministic.
class GenerationBackend {
public:
  virtual ~GenerationBackend() = default;
  virtual std::string name() const = 0;
  virtual std::string generate(const std::string& prompt, const GenerationParams& params) = 0;
};

// Wraps a backend call and truncates the output at the earliest occurrence
// of any stop sequence.
std::string generate(GenerationBackend& backend, const std::string& prompt,
                     const GenerationParams& params);

// Deterministic test backend: an ordered script of (matcher, response)
// entries. A prompt picks the first unconsumed matching entry; once every
// matching entry is consumed, the last one keeps answering. With duplicate
// matchers this yields a response sequence. In strict mode an unmatched
// prompt is an error; otherwise it returns "".
class ScriptedBackend final : public GenerationBackend {
public:
  enum class Match { Exact, Substring };
  struct Entry {
    Match match = Match::Substring;
    std::string pattern;
    std::string response;
  };

  explicit ScriptedBackend(std::vector<Entry> script, bool strict = true);

  std::string name() const override { return "scripted"; }
  std::string generate(const std::string& prompt, const GenerationParams& params) override;

  // Call log, for test inspection.
  std::vector<std::string> prompts_seen() const;

  // JSON array of {"match": "exact"|"substring", "pattern": ..., "response": ...}.
  static ScriptedBackend from_json_file(const std::filesystem::path& path, bool strict = true);

private:
  struct Slot {
    Entry entry;
    bool consumed = false;
  };

  mutable std::mutex mu_;
  std::vector<Slot> slots_;
  bool strict_;
  std::vector<std::string> seen_;
};

}  // namespace longhop
