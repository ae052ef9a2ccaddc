#pragma once

#include <stdexcept>
#include <string>

namespace longhop {

// Failure classes used across the engine. The CLI maps groups of these onto
// distinct process exit codes.
enum class ErrorCode {
  InvalidConfiguration,
  Precondition,
  ShapeMismatch,
  DegenerateInput,
  RetrievalBackend,
  GenerationBackend,
  ScriptMiss,
  Template,
  UnparseableMove,
  EmptyFact,
  RefineFailure,
  Io,
  EmptyDataset,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfiguration: return "invalid-configuration";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::DegenerateInput: return "degenerate-input";
    case ErrorCode::RetrievalBackend: return "retrieval-backend";
    case ErrorCode::GenerationBackend: return "generation-backend";
    case ErrorCode::ScriptMiss: return "script-miss";
    case ErrorCode::Template: return "template";
    case ErrorCode::UnparseableMove: return "unparseable-move";
    case ErrorCode::EmptyFact: return "empty-fact";
    case ErrorCode::RefineFailure: return "refine-failure";
    case ErrorCode::Io: return "io";
    case ErrorCode::EmptyDataset: return "empty-dataset";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace longhop
