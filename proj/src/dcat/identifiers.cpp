#include "dcatkit/dcat/identifiers.hpp"

#include "dcatkit/dcat/terms.hpp"

namespace dcatkit::dcat {

std::string AltIdentifier::notation_datatype() const {
  if (!notation || !notation->is_literal() || !notation->language().empty()) return {};
  if (notation->datatype() == std::string(ns::xsd) + "string") return {};
  return notation->datatype();
}

IdentifierSet resolve_identifiers(const rdf::Graph& g, const rdf::Term& node) {
  IdentifierSet ids;
  if (node.is_literal()) return ids;
  ids.primary = g.objects(node, terms::dcterms::identifier);
  for (const rdf::Term& alt : g.objects(node, terms::adms::identifier)) {
    AltIdentifier a{alt, std::nullopt, {}, {}};
    if (alt.is_literal()) {
      // A bare literal behaves as its own notation.
      a.notation = alt;
    } else {
      a.notation = g.object(alt, terms::skos::notation);
      a.schema_agencies = g.objects(alt, terms::adms::schemaAgency);
      a.creators = g.objects(alt, terms::dcterms::creator);
    }
    ids.alternates.push_back(std::move(a));
  }
  return ids;
}

bool is_http_form(std::string_view text) {
  for (std::string_view scheme : {"http://", "https://"}) {
    if (text.size() > scheme.size() && text.substr(0, scheme.size()) == scheme) {
      const char host = text[scheme.size()];
      return host != '/' && host != ' ';
    }
  }
  return false;
}

}  // namespace dcatkit::dcat
