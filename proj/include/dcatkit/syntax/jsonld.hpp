#pragma once

#include <string>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::syntax {

inline constexpr const char* kSchemaOrgContext = "https://schema.org/";

/// Emits `g` as JSON-LD with the fixed Schema.org context: one node object
/// per subject under @graph, IRI and blank objects as {"@id": ...}
/// references. Throws Error(UnmappedTerm) for predicates or types outside
/// the Schema.org namespace.
std::string emit_jsonld(const rdf::Graph& g, int indent = 2);

}  // namespace dcatkit::syntax
