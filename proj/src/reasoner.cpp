#include "longhop/reasoner.hpp"

#include <algorithm>
#include <chrono>

#include "longhop/error.hpp"
#include "longhop/hash.hpp"

namespace longhop {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trim_copy(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

// Strips one leading marker echo ("Fact:", "Refined:") if present.
std::string strip_echo(const std::string& text, const std::string& marker) {
  const std::string trimmed = trim_copy(text);
  if (trimmed.compare(0, marker.size(), marker) == 0) {
    return trim_copy(trimmed.substr(marker.size()));
  }
  return trimmed;
}

struct PlannedMove {
  PlannerMove move;
  std::string prompt;
};

// Renders the planning prompt, generates, and parses the move, retrying the
// generation once when the output is unparseable or carries the wrong move
// marker for this loop.
PlannedMove plan_move(const std::string& thought, const PromptTemplate& planner_template,
                      GenerationBackend& backend, const GenerationParams& params,
                      const MarkerProtocol& markers, PlannerMove::Kind expected) {
  const std::string prompt = planner_template.render({{"Thought", thought}});
  auto attempt = [&]() -> PlannerMove {
    const std::string raw = generate(backend, prompt, params);
    PlannerMove move = parse_planner_output(raw, markers);
    if (move.kind != PlannerMove::Kind::Final && move.kind != expected) {
      fail(ErrorCode::UnparseableMove, "planner emitted an off-protocol move: " + raw);
    }
    return move;
  };
  try {
    return PlannedMove{attempt(), prompt};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnparseableMove) {
      throw;
    }
    return PlannedMove{attempt(), prompt};
  }
}

struct ForcedFinal {
  std::string answer;
  std::string prompt;
};

// Cap-hit closing call: answer from the accumulated thought. The Final
// marker is honored when present; otherwise the full generation text is the
// answer.
ForcedFinal force_final(const std::string& thought, const PromptTemplate& final_template,
                        GenerationBackend& backend, const GenerationParams& params,
                        const MarkerProtocol& markers) {
  const std::string prompt = final_template.render({{"Thought", thought}});
  const std::string raw = generate(backend, prompt, params);
  try {
    const PlannerMove move = parse_planner_output(raw, markers);
    if (move.kind == PlannerMove::Kind::Final) {
      return ForcedFinal{move.text, prompt};
    }
  } catch (const Error&) {
    // fall through to the raw text
  }
  return ForcedFinal{trim_copy(raw), prompt};
}

std::string abort_slug(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnparseableMove:
      return "unparseable-planner";
    case ErrorCode::EmptyFact:
      return "empty-fact";
    case ErrorCode::RefineFailure:
      return "refine-failure";
    case ErrorCode::GenerationBackend:
    case ErrorCode::ScriptMiss:
      return "generation-backend";
    case ErrorCode::RetrievalBackend:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::DegenerateInput:
      return "retrieval-backend";
    default:
      return to_string(code);
  }
}

void require_backends(const ReasonerBackends& backends) {
  if (backends.generation == nullptr || backends.embedding == nullptr) {
    fail(ErrorCode::Precondition, "reasoner requires generation and embedding backends");
  }
}

}  // namespace

RetrievedContext retrieve_for_query(const std::string& query, const ChunkIndex& index,
                                    const EngineConfig& config,
                                    const ReasonerBackends& backends) {
  const std::size_t k = static_cast<std::size_t>(config.top_k);
  const std::size_t pool =
      config.rerank_enabled ? std::max<std::size_t>(k, config.rerank_pool_size) : k;
  RetrievedContext retrieved = recall_top_k(index, query, pool, *backends.embedding);
  if (config.rerank_enabled && !retrieved.hits.empty()) {
    if (backends.scorer == nullptr) {
      fail(ErrorCode::InvalidConfiguration, "rerank is enabled but no pair scorer is configured");
    }
    const std::size_t k_final = std::min(k, retrieved.hits.size());
    retrieved = rerank(query, retrieved, index, *backends.scorer, k_final);
  }
  return retrieved;
}

PlannerMove plan_next(const ReasoningTrace& trace, const PromptTemplate& decompose,
                      GenerationBackend& backend, const GenerationParams& params,
                      const MarkerProtocol& markers) {
  if (trace.status != TraceStatus::Running) {
    fail(ErrorCode::Precondition, "plan_next requires a running trace");
  }
  return plan_move(trace.render_thought(), decompose, backend, params, markers,
                   PlannerMove::Kind::Subquestion)
      .move;
}

std::string extract_fact(const std::string& sub_question, const RetrievedContext& retrieved,
                         const PromptTemplate& extract, GenerationBackend& backend,
                         const GenerationParams& params) {
  const std::string prompt =
      extract.render({{"Context_Q", retrieved.paragraph}, {"Question", sub_question}});
  const std::string raw = generate(backend, prompt, params);
  const std::string fact = strip_echo(raw, "Fact:");
  if (fact.empty()) {
    fail(ErrorCode::EmptyFact, "fact extraction returned empty output for: " + sub_question);
  }
  return fact;
}

ReasoningTrace run_iterqa(const std::string& question, const ChunkIndex& index,
                          const EngineConfig& config, const PromptSet& prompts,
                          const ReasonerBackends& backends) {
  require_backends(backends);
  if (config.max_iterations < 1 || config.top_k < 1) {
    fail(ErrorCode::Precondition, "run_iterqa requires max_iterations >= 1 and top_k >= 1");
  }
  const MarkerProtocol markers;
  ReasoningTrace trace;
  trace.question = question;

  try {
    for (int i = 0; i < config.max_iterations; ++i) {
      const PlannedMove plan =
          plan_move(trace.render_thought(), prompts.decompose, *backends.generation,
                    config.generation, markers, PlannerMove::Kind::Subquestion);
      if (plan.move.kind == PlannerMove::Kind::Final) {
        trace.final_answer = plan.move.text;
        trace.final_prompt_digest = fnv1a64_hex(plan.prompt);
        trace.status = TraceStatus::Answered;
        return trace;
      }

      const auto step_start = Clock::now();
      StepRecord step;
      step.sub_question = plan.move.text;
      step.plan_prompt_digest = fnv1a64_hex(plan.prompt);
      step.retrieved = retrieve_for_query(step.sub_question, index, config, backends);

      const std::string extract_prompt = prompts.extract_fact.render(
          {{"Context_Q", step.retrieved.paragraph}, {"Question", step.sub_question}});
      step.extract_prompt_digest = fnv1a64_hex(extract_prompt);
      const std::string raw =
          generate(*backends.generation, extract_prompt, config.generation);
      step.fact = strip_echo(raw, "Fact:");
      step.wall_ms = ms_since(step_start);

      if (step.fact.empty()) {
        // Default policy: record the step, then abort the trace.
        trace.steps.push_back(std::move(step));
        trace.iterations_used = i + 1;
        fail(ErrorCode::EmptyFact,
             "fact extraction returned empty output for: " + plan.move.text);
      }
      trace.steps.push_back(std::move(step));
      trace.iterations_used = i + 1;
    }

    trace.cap_reached = true;
    const ForcedFinal fin = force_final(trace.render_thought(), prompts.final_answer,
                                        *backends.generation, config.generation, markers);
    trace.final_answer = fin.answer;
    trace.final_prompt_digest = fnv1a64_hex(fin.prompt);
    trace.status = TraceStatus::Answered;
  } catch (const Error& e) {
    trace.status = TraceStatus::Aborted;
    trace.abort_reason = abort_slug(e.code());
    trace.abort_detail = e.what();
    trace.final_answer.reset();
  }
  return trace;
}

PlannerMove draft_step(const KCDTrace& trace, const PromptTemplate& step_prompt,
                       GenerationBackend& backend, const GenerationParams& params,
                       const MarkerProtocol& markers) {
  if (trace.status != TraceStatus::Running) {
    fail(ErrorCode::Precondition, "draft_step requires a running trace");
  }
  if (trace.question.empty()) {
    fail(ErrorCode::Precondition, "draft_step requires a non-empty question");
  }
  return plan_move(trace.render_thought(), step_prompt, backend, params, markers,
                   PlannerMove::Kind::Step)
      .move;
}

std::string refine_step(const std::string& draft, const RetrievedContext& retrieved,
                        const PromptTemplate& refine_prompt, GenerationBackend& backend,
                        const GenerationParams& params) {
  if (draft.empty()) {
    fail(ErrorCode::Precondition, "refine_step requires a non-empty draft");
  }
  const std::string prompt =
      refine_prompt.render({{"Paragraph", retrieved.paragraph}, {"Statement", draft}});
  const std::string raw = generate(backend, prompt, params);
  const std::string refined = strip_echo(raw, "Refined:");
  if (refined.empty()) {
    fail(ErrorCode::RefineFailure, "step refinement returned empty output for: " + draft);
  }
  return refined;
}

KCDTrace run_kcd(const std::string& question, const ChunkIndex& index,
                 const EngineConfig& config, const PromptSet& prompts,
                 const ReasonerBackends& backends) {
  require_backends(backends);
  if (config.max_iterations < 1 || config.top_k < 1) {
    fail(ErrorCode::Precondition, "run_kcd requires max_iterations >= 1 and top_k >= 1");
  }
  const MarkerProtocol markers;
  KCDTrace trace;
  trace.question = question;

  try {
    for (int i = 0; i < config.max_iterations; ++i) {
      const PlannedMove plan =
          plan_move(trace.render_thought(), prompts.kcd_step, *backends.generation,
                    config.generation, markers, PlannerMove::Kind::Step);
      if (plan.move.kind == PlannerMove::Kind::Final) {
        trace.final_answer = plan.move.text;
        trace.final_prompt_digest = fnv1a64_hex(plan.prompt);
        trace.status = TraceStatus::Answered;
        return trace;
      }

      const auto step_start = Clock::now();
      KCDStep step;
      step.draft = plan.move.text;
      step.draft_prompt_digest = fnv1a64_hex(plan.prompt);
      // Retrieval query is the draft statement itself, not a derived
      // question: committed steps stay grounded in what the draft claims.
      step.retrieved = retrieve_for_query(step.draft, index, config, backends);
      step.ungrounded = step.retrieved.paragraph.empty();

      const std::string refine_prompt = prompts.kcd_refine.render(
          {{"Paragraph", step.retrieved.paragraph}, {"Statement", step.draft}});
      step.refine_prompt_digest = fnv1a64_hex(refine_prompt);
      const std::string raw =
          generate(*backends.generation, refine_prompt, config.generation);
      step.refined = strip_echo(raw, "Refined:");
      step.wall_ms = ms_since(step_start);

      if (step.refined.empty()) {
        fail(ErrorCode::RefineFailure,
             "step refinement returned empty output for: " + step.draft);
      }
      trace.steps.push_back(std::move(step));
      trace.iterations_used = i + 1;
    }

    trace.cap_reached = true;
    const ForcedFinal fin = force_final(trace.render_thought(), prompts.final_answer,
                                        *backends.generation, config.generation, markers);
    trace.final_answer = fin.answer;
    trace.final_prompt_digest = fnv1a64_hex(fin.prompt);
    trace.status = TraceStatus::Answered;
  } catch (const Error& e) {
    trace.status = TraceStatus::Aborted;
    trace.abort_reason = abort_slug(e.code());
    trace.abort_detail = e.what();
    trace.final_answer.reset();
  }
  return trace;
}

}  // namespace longhop
