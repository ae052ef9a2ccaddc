#pragma once

#include <string>

namespace longhop::assets {

// Prompt bodies compiled into the library. The prompts/ directory at the
// repository root ships the same bytes as plain-text files; a test pins both
// to frozen digests.
const std::string& decompose_prompt();
const std::string& extract_fact_prompt();
const std::string& kcd_step_prompt();
const std::string& kcd_refine_prompt();
const std::string& final_answer_prompt();

// The five few-shot example questions, one per line.
const std::string& fewshot_questions();

// Default filler prose for the variable-tracking generator, cycled to the
// requested length.
const std::string& default_padding_text();

}  // namespace longhop::assets
