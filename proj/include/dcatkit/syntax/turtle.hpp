#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dcatkit/syntax/diagnostics.hpp"

namespace dcatkit::syntax {

/// Parses a Turtle document. Relative IRIs resolve against `base` (or an
/// in-document @base); without either they are reported as BaseRequired.
/// Never throws on malformed input.
ParseResult parse_turtle(std::string_view text, std::optional<std::string_view> base = std::nullopt);

/// Deterministic Turtle: prefix directives in name order, subjects in term
/// order, predicates sorted lexicographically, objects in term order.
std::string serialize_turtle(const rdf::Graph& g);

/// RFC 3986 reference resolution (section 5.2).
std::string resolve_iri(std::string_view base, std::string_view reference);

}  // namespace dcatkit::syntax
