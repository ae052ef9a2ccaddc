#pragma once

#include <string>

#include "longhop/config.hpp"
#include "longhop/generation.hpp"
#include "longhop/prompt.hpp"
#include "longhop/retrieval.hpp"
#include "longhop/trace.hpp"

namespace longhop {

struct ReasonerBackends {
  GenerationBackend* generation = nullptr;
  EmbeddingBackend* embedding = nullptr;
  PairScorer* scorer = nullptr;  // required only when rerank is enabled
};

// --- Iterative QA with fact extraction ------------------------------------
//
// Loop: plan the next sub-question from the thought, retrieve top-k chunks
// for it, extract the fact that answers it, append (sub-question, fact) to
// the thought; stop on a Final move or after max_iterations, in which case
// one last answer-from-thought generation is attempted.

// Renders the decomposition prompt with the current thought and parses the
// move. One retry on unparseable output, then the error propagates.
PlannerMove plan_next(const ReasoningTrace& trace, const PromptTemplate& decompose,
                      GenerationBackend& backend, const GenerationParams& params,
                      const MarkerProtocol& markers = {});

// Distills the single fact answering the sub-question from the retrieved
// paragraph. A leading "Fact:" echo is stripped; empty output is an error.
std::string extract_fact(const std::string& sub_question, const RetrievedContext& retrieved,
                         const PromptTemplate& extract, GenerationBackend& backend,
                         const GenerationParams& params);

ReasoningTrace run_iterqa(const std::string& question, const ChunkIndex& index,
                          const EngineConfig& config, const PromptSet& prompts,
                          const ReasonerBackends& backends);

// --- Knowledge-constrained decoding ----------------------------------------
//
// Loop: draft a tentative reasoning step, retrieve knowledge for the draft
// statement itself, rewrite the step so it is grounded in the retrieved
// text, and accumulate only the refined step. Draft text never re-enters a
// planning prompt.

PlannerMove draft_step(const KCDTrace& trace, const PromptTemplate& step_prompt,
                       GenerationBackend& backend, const GenerationParams& params,
                       const MarkerProtocol& markers = {});

std::string refine_step(const std::string& draft, const RetrievedContext& retrieved,
                        const PromptTemplate& refine_prompt, GenerationBackend& backend,
                        const GenerationParams& params);

KCDTrace run_kcd(const std::string& question, const ChunkIndex& index,
                 const EngineConfig& config, const PromptSet& prompts,
                 const ReasonerBackends& backends);

// Retrieval step shared by both loops: recall top-k (or the rerank pool when
// a scorer is configured) and optionally rerank down to top_k.
RetrievedContext retrieve_for_query(const std::string& query, const ChunkIndex& index,
                                    const EngineConfig& config,
                                    const ReasonerBackends& backends);

}  // namespace longhop
