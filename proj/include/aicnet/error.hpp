#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aicnet {

enum class ErrorCode {
  Parse,
  DuplicateId,
  DanglingParent,
  MissingQuote,
  CyclicThread,
  EmptyCorpus,
  UnknownReading,
  UnknownNode,
  DimensionMismatch,
  ZeroVector,
  MissingEmbedding,
  EmptyText,
  UndefinedIdf,
  InfeasibleParams,
  InvalidArgument,
  Io,
  Internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingParent: return "DanglingParent";
    case ErrorCode::MissingQuote: return "MissingQuote";
    case ErrorCode::CyclicThread: return "CyclicThread";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::UnknownReading: return "UnknownReading";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::MissingEmbedding: return "MissingEmbedding";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::UndefinedIdf: return "UndefinedIdf";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Error";
}

// Internal errors signal a broken invariant inside the library rather than
// bad input; the CLI maps them to exit code 2.
inline bool is_internal(ErrorCode code) {
  return code == ErrorCode::UndefinedIdf || code == ErrorCode::Internal;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& reason,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(code, subject, reason, line)),
        code_(code),
        subject_(std::move(subject)),
        reason_(reason),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  // The artifact / quote / reading / node id the error is about, if any.
  const std::string& subject() const noexcept { return subject_; }
  const std::string& reason() const noexcept { return reason_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& subject,
                            const std::string& reason,
                            std::optional<std::size_t> line) {
    std::string out(to_string(code));
    if (line) out += " at line " + std::to_string(*line);
    if (!subject.empty()) out += " (" + subject + ")";
    if (!reason.empty()) out += ": " + reason;
    return out;
  }

  ErrorCode code_;
  std::string subject_;
  std::string reason_;
  std::optional<std::size_t> line_;
};

}  // namespace aicnet
