#pragma once

#include <string>
#include <vector>

#include "dcatkit/crosswalk/mapping.hpp"
#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::crosswalk {

/// A source statement the export could not carry over.
struct Loss {
  rdf::Triple triple;
  std::string reason;
};

struct CrosswalkResult {
  rdf::Graph graph;          // Schema.org terms only
  std::vector<Loss> losses;  // in triple order
};

/// Exports the description of `root` and of every node reachable from it
/// through mapped properties. `g` should be closed with dcat::infer_closure;
/// statements entailed by a more specific one are not exported twice.
/// Throws Error(RootNotExportable) unless root is a dataset, catalog or
/// distribution.
CrosswalkResult to_schema_org(const rdf::Graph& g, const rdf::Term& root,
                              const MappingTable& table = load_mapping_table());

/// "start/end" with ".." for an open end; nullopt for a period without bounds.
std::optional<std::string> temporal_interval(const rdf::Graph& g, const rdf::Term& period);

}  // namespace dcatkit::crosswalk
