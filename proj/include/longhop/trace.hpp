#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "longhop/retrieval.hpp"

namespace longhop {

enum class TraceStatus { Running, Answered, Aborted };

const char* to_string(TraceStatus status);

// One executed iteration: sub-question, what was retrieved for it, and the
// fact distilled from the retrieved paragraph. The digests are FNV-1a hashes
// of the exact prompts sent, for grounding audits.
struct StepRecord {
  std::string sub_question;
  RetrievedContext retrieved;
  std::string fact;
  std::string plan_prompt_digest;
  std::string extract_prompt_digest;
  double wall_ms = 0.0;
};

// The evolving reasoning thought: the question plus alternating
// sub-questions and grounded facts.
struct ReasoningTrace {
  std::string question;
  std::vector<StepRecord> steps;
  std::optional<std::string> final_answer;
  TraceStatus status = TraceStatus::Running;
  std::string abort_reason;  // slug, set iff status == Aborted
  std::string abort_detail;
  bool cap_reached = false;
  int iterations_used = 0;
  std::string final_prompt_digest;

  std::vector<std::pair<std::string, std::string>> entries() const;

  // The thought T: the question followed by each entry's marker lines. The
  // rendering at step i is a strict prefix of the rendering at step i+1.
  std::string render_thought() const;
};

struct KCDStep {
  std::string draft;
  RetrievedContext retrieved;
  std::string refined;
  bool ungrounded = false;  // retrieval came back empty
  std::string draft_prompt_digest;
  std::string refine_prompt_digest;
  double wall_ms = 0.0;
};

// Knowledge-constrained decoding trace: draft steps are quarantined; only
// refined steps accumulate into the thought.
struct KCDTrace {
  std::string question;
  std::vector<KCDStep> steps;
  std::optional<std::string> final_answer;
  TraceStatus status = TraceStatus::Running;
  std::string abort_reason;
  std::string abort_detail;
  bool cap_reached = false;
  int iterations_used = 0;
  std::string final_prompt_digest;

  std::string render_thought() const;
};

// Line-delimited trace records for audit and regression diffing.
nlohmann::json trace_to_json(const ReasoningTrace& trace);
nlohmann::json trace_to_json(const KCDTrace& trace);

}  // namespace longhop
