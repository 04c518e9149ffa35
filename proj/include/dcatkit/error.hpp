#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcatkit {

enum class ErrorCode {
  InvalidIri,
  InvalidTerm,
  InvalidTriple,
  DatatypeLanguageClash,
  SyntaxError,
  BaseRequired,
  UnmappedTerm,
  CorruptVocabularyFile,
  CorruptDataFile,
  NotACatalogedResource,
  InvalidDuration,
  EmptyPeriod,
  UnknownRuleId,
  RootNotExportable,
  NotADataset,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the toolkit. The code names the
/// failure class so callers can branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dcatkit
