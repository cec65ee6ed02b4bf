#pragma once

#include <stdexcept>
#include <string>

namespace topocut {

// Machine-readable failure reasons. The CLI maps these onto exit codes:
// precondition rejections exit 2, theorem-guaranteed searches that come up
// empty exit 3 (a bug, never expected), I/O and schema problems exit 1.
enum class Errc {
  DimensionMismatch,
  DegenerateSpan,
  NotGeneralPosition,
  ClassCountMismatch,
  SearchExhausted,
  PerturbationFailed,
  UnequalClassSizes,
  RecursionFailed,
  OddTypeCount,
  MalformedSplit,
  ParameterRange,
  IncompleteColoring,
  InvalidLabeling,
  NotIntersectingFamily,
  GenerationFailed,
  IoError,
  SchemaError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace topocut
