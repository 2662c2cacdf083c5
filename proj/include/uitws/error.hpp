#pragma once

#include <stdexcept>
#include <string>

namespace uitws {

enum class ErrorKind {
  EmptySentence,
  MalformedToken,
  LabelArity,
  NotEnoughData,
  ResourceIO,
  MalformedEntry,
  NeedsLabels,
  DegenerateLabels,
  BadInput,
  ModelVersion,
  AlignmentError,
};

const char* to_string(ErrorKind kind);

/// Toolkit-wide exception; `kind()` identifies the error class so callers
/// and tests can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uitws
