#pragma once

#include <optional>
#include <vector>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::dcat {

/// An adms:Identifier node.
struct AltIdentifier {
  rdf::Term node;
  std::optional<rdf::Term> notation;   // skos:notation
  std::vector<rdf::Term> schema_agencies;
  std::vector<rdf::Term> creators;

  /// Datatype IRI of the notation; empty for plain or language-tagged text.
  std::string notation_datatype() const;
};

struct IdentifierSet {
  std::vector<rdf::Term> primary;  // dcterms:identifier values
  std::vector<AltIdentifier> alternates;

  bool empty() const noexcept { return primary.empty() && alternates.empty(); }
};

IdentifierSet resolve_identifiers(const rdf::Graph& g, const rdf::Term& node);

/// True for "http://" or "https://" text followed by a host.
bool is_http_form(std::string_view text);

}  // namespace dcatkit::dcat
