#pragma once

#include <string>
#include <string_view>

#include "dcatkit/syntax/diagnostics.hpp"

namespace dcatkit::syntax {

/// Strict line-based N-Triples parser; stops at the first malformed line.
ParseResult parse_ntriples(std::string_view text);

/// One triple per line in Triple order.
std::string serialize_ntriples(const rdf::Graph& g);

}  // namespace dcatkit::syntax
