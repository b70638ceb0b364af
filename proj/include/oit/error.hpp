#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace oit {

/// A single invariant violation found while checking a candidate instance.
/// `code` is a stable machine-readable tag; `ids` names the offending
/// records, tokens or links; `path` is a JSON pointer when the candidate
/// came from a document.
struct Diagnostic {
  std::string code;
  std::string message;
  std::vector<std::string> ids;
  std::string path;

  std::string to_string() const;
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  /// Short tag such as "empty sub-information" or "record identity clash".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Raised when an operand fails instance validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace oit
