#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::crosswalk {

/// The DataCite-mandatory elements of a dataset.
struct CitationRecord {
  std::string identifier;
  std::string identifier_scheme;  // "DOI", "URL", a datatype or agency name, or "local"
  std::vector<std::string> creators;
  std::string title;
  std::string publisher;
  std::optional<int> publication_year;
  std::string resource_type;
  /// Names of absent fields: identifier, creators, title, publisher,
  /// publication_year, resource_type.
  std::vector<std::string> missing;

  bool complete() const noexcept { return missing.empty(); }
  std::string to_json(int indent = 2) const;
};

/// Throws Error(NotADataset) when the node is not typed dcat:Dataset (or a
/// subclass). Absent elements are listed in `missing`, never fatal.
CitationRecord to_citation(const rdf::Graph& g, const rdf::Term& dataset);

/// "Creators (Year): Title. Publisher. Identifier" on one line.
std::string format_citation(const CitationRecord& rec);

}  // namespace dcatkit::crosswalk
