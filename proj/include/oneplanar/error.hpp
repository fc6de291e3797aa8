#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace oneplanar {

enum class ErrorCode {
  SelfLoop,
  ParallelEdge,
  VertexOutOfRange,
  InconsistentRotation,
  EdgeCrossedTwice,
  AdjacentPair,
  NotPlanarRotation,
  InvalidBlockEmbedding,
  UniverseTooLarge,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Single exception type for every recoverable failure in the library.
/// `line` is set by the file parsers so callers can point at the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<int> line = std::nullopt)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
};

}  // namespace oneplanar
