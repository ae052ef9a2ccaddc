#include "longhop/trace.hpp"

namespace longhop {

const char* to_string(TraceStatus status) {
  switch (status) {
    case TraceStatus::Running: return "running";
    case TraceStatus::Answered: return "answered";
    case TraceStatus::Aborted: return "aborted";
  }
  return "unknown";
}

std::vector<std::pair<std::string, std::string>> ReasoningTrace::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(steps.size());
  for (const auto& step : steps) {
    out.emplace_back(step.sub_question, step.fact);
  }
  return out;
}

std::string ReasoningTrace::render_thought() const {
  std::string out = question;
  for (const auto& step : steps) {
    out += "\nSubquestion: " + step.sub_question;
    out += "\nFact: " + step.fact;
  }
  return out;
}

std::string KCDTrace::render_thought() const {
  std::string out = question;
  for (const auto& step : steps) {
    out += "\nStep: " + step.refined;
  }
  return out;
}

namespace {

nlohmann::json hits_to_json(const RetrievedContext& retrieved) {
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& hit : retrieved.hits) {
    hits.push_back({{"chunk", hit.chunk}, {"score", hit.score}});
  }
  return hits;
}

template <typename Trace>
nlohmann::json trace_header(const Trace& trace, const char* algorithm) {
  nlohmann::json doc{
      {"algorithm", algorithm},
      {"question", trace.question},
      {"status", to_string(trace.status)},
      {"cap_reached", trace.cap_reached},
      {"iterations_used", trace.iterations_used},
  };
  if (trace.final_answer) {
    doc["final_answer"] = *trace.final_answer;
  }
  if (trace.status == TraceStatus::Aborted) {
    doc["abort_reason"] = trace.abort_reason;
    doc["abort_detail"] = trace.abort_detail;
  }
  if (!trace.final_prompt_digest.empty()) {
    doc["final_prompt_digest"] = trace.final_prompt_digest;
  }
  return doc;
}

}  // namespace

nlohmann::json trace_to_json(const ReasoningTrace& trace) {
  nlohmann::json doc = trace_header(trace, "iterqa");
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    steps.push_back({
        {"sub_question", step.sub_question},
        {"fact", step.fact},
        {"hits", hits_to_json(step.retrieved)},
        {"plan_prompt_digest", step.plan_prompt_digest},
        {"extract_prompt_digest", step.extract_prompt_digest},
        {"wall_ms", step.wall_ms},
    });
  }
  doc["steps"] = std::move(steps);
  return doc;
}

nlohmann::json trace_to_json(const KCDTrace& trace) {
  nlohmann::json doc = trace_header(trace, "kcd");
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    steps.push_back({
        {"draft", step.draft},
        {"refined", step.refined},
        {"ungrounded", step.ungrounded},
        {"hits", hits_to_json(step.retrieved)},
        {"draft_prompt_digest", step.draft_prompt_digest},
        {"refine_prompt_digest", step.refine_prompt_digest},
        {"wall_ms", step.wall_ms},
    });
  }
  doc["steps"] = std::move(steps);
  return doc;
}

}  // namespace longhop
