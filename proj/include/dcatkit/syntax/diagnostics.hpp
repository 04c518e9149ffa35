#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dcatkit/error.hpp"
#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::syntax {

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, in bytes
  std::string message;
  ErrorCode code = ErrorCode::SyntaxError;

  std::string to_string() const;
};

struct ParseDiagnostics {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

/// Parser output. On failure `graph` holds the statements completed before
/// the first fatal error.
struct ParseResult {
  rdf::Graph graph;
  ParseDiagnostics diagnostics;

  bool ok() const noexcept { return diagnostics.ok(); }
};

}  // namespace dcatkit::syntax
