#include "longhop/generation.hpp"

#include <fstream>

#include <json.hpp>

#include "longhop/error.hpp"

namespace longhop {

std::string generate(GenerationBackend& backend, const std::string& prompt,
                     const GenerationParams& params) {
  std::string text = backend.generate(prompt, params);
  std::size_t cut = std::string::npos;
  for (const auto& stop : params.stop_sequences) {
    if (stop.empty()) {
      continue;
    }
    const auto pos = text.find(stop);
    if (pos != std::string::npos && pos < cut) {
      cut = pos;
    }
  }
  if (cut != std::string::npos) {
    text.erase(cut);
  }
  return text;
}

ScriptedBackend::ScriptedBackend(std::vector<Entry> script, bool strict) : strict_(strict) {
  slots_.reserve(script.size());
  for (auto& entry : script) {
    slots_.push_back(Slot{std::move(entry), false});
  }
}

std::string ScriptedBackend::generate(const std::string& prompt, const GenerationParams&) {
  std::lock_guard<std::mutex> lock(mu_);
  seen_.push_back(prompt);

  Slot* first_unconsumed = nullptr;
  Slot* last_match = nullptr;
  for (auto& slot : slots_) {
    const bool matches = slot.entry.match == Match::Exact
                             ? prompt == slot.entry.pattern
                             : prompt.find(slot.entry.pattern) != std::string::npos;
    if (!matches) {
      continue;
    }
    last_match = &slot;
    if (!slot.consumed && first_unconsumed == nullptr) {
      first_unconsumed = &slot;
    }
  }
  Slot* pick = first_unconsumed != nullptr ? first_unconsumed : last_match;
  if (pick == nullptr) {
    if (strict_) {
      fail(ErrorCode::ScriptMiss, "scripted backend has no entry matching prompt: " + prompt);
    }
    return "";
  }
  pick->consumed = true;
  return pick->entry.response;
}

std::vector<std::string> ScriptedBackend::prompts_seen() const {
  std::lock_guard<std::mutex> lock(mu_);
  return seen_;
}

ScriptedBackend ScriptedBackend::from_json_file(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::Io, "cannot open script file: " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(ErrorCode::Io, "cannot parse script file " + path.string() + ": " + e.what());
  }
  if (!doc.is_array()) {
    fail(ErrorCode::InvalidConfiguration, "script file must hold a JSON array of entries");
  }
  std::vector<Entry> script;
  for (const auto& item : doc) {
    Entry entry;
    const std::string kind = item.value("match", "substring");
    if (kind == "exact") {
      entry.match = Match::Exact;
    } else if (kind == "substring") {
      entry.match = Match::Substring;
    } else {
      fail(ErrorCode::InvalidConfiguration, "script entry match must be exact or substring");
    }
    if (!item.contains("pattern") || !item.contains("response")) {
      fail(ErrorCode::InvalidConfiguration, "script entry needs pattern and response fields");
    }
    entry.pattern = item.at("pattern").get<std::string>();
    entry.response = item.at("response").get<std::string>();
    script.push_back(std::move(entry));
  }
  return ScriptedBackend(std::move(script), strict);
}

}  // namespace longhop
