#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace longhop {

// A prompt body with {Name} placeholders. Rendering substitutes every
// placeholder in a single pass (substituted text is never re-expanded) and
// fails if any placeholder is left unbound.
class PromptTemplate {
public:
  PromptTemplate() = default;
  PromptTemplate(std::string name, std::string body);

  const std::string& name() const { return name_; }
  const std::string& body() const { return body_; }
  const std::vector<std::string>& placeholders() const { return placeholders_; }

  std::string render(const std::map<std::string, std::string>& bindings) const;

private:
  std::string name_;
  std::string body_;
  std::vector<std::string> placeholders_;  // sorted, unique
};

// Line markers of the planner output protocol. The few-shot assets embed the
// same markers, so model output and parser agree.
struct MarkerProtocol {
  std::string subquestion = "Subquestion:";
  std::string step = "Step:";
  std::string final = "Final answer:";
};

struct PlannerMove {
  enum class Kind { Subquestion, Step, Final };
  Kind kind = Kind::Final;
  std::string text;
};

// A Final marker anywhere wins; otherwise the first line beginning with a
// move marker decides. No recognized marker is an unparseable-move error.
PlannerMove parse_planner_output(const std::string& raw, const MarkerProtocol& markers = {});

// The prompt assets used by the two reasoning loops.
struct PromptSet {
  PromptTemplate decompose;     // {Thought}
  PromptTemplate extract_fact;  // {Context_Q}, {Question}
  PromptTemplate kcd_step;      // {Thought}
  PromptTemplate kcd_refine;    // {Paragraph}, {Statement}
  PromptTemplate final_answer;  // {Thought}

  // Compiled-in assets (byte-identical to the prompts/ files).
  static PromptSet builtin();
  // Loads <dir>/decompose.txt etc.; missing files fall back to builtin.
  static PromptSet from_directory(const std::filesystem::path& dir);
};

}  // namespace longhop
