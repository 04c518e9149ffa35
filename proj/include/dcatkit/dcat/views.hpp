#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcatkit/dcat/identifiers.hpp"
#include "dcatkit/dcat/spatial.hpp"
#include "dcatkit/dcat/temporal.hpp"
#include "dcatkit/dcat/vocabulary.hpp"

namespace dcatkit::dcat {

/// A value together with its parsed form, when parsing succeeded.
template <typename T>
struct Parsed {
  rdf::Term source;
  std::optional<T> value;
};

struct Attribution {
  rdf::Term node;
  std::optional<rdf::Term> agent;
  std::vector<rdf::Term> roles;
};

struct Relationship {
  rdf::Term node;
  std::vector<rdf::Term> targets;  // dcterms:relation
  std::vector<rdf::Term> roles;
};

enum class QualityKind { annotation, measurement, policy, conformance };

struct QualityStatement {
  QualityKind kind = QualityKind::annotation;
  rdf::Term body;
  std::optional<rdf::Term> metric;  // dqv:isMeasurementOf, measurements only
};

/// Fields shared by every cataloged resource.
struct ResourceView {
  rdf::Term node;
  std::vector<rdf::Term> types;  // asserted plus inherited
  std::vector<rdf::Term> titles;
  std::vector<rdf::Term> descriptions;
  std::vector<rdf::Term> issued;
  std::vector<rdf::Term> modified;
  std::vector<rdf::Term> licenses;
  std::vector<rdf::Term> access_rights;
  std::vector<rdf::Term> rights;
  std::vector<rdf::Term> policies;  // odrl:hasPolicy
  std::vector<rdf::Term> conforms_to;
  std::vector<rdf::Term> landing_pages;
  std::vector<rdf::Term> contact_points;
  std::vector<rdf::Term> creators;
  std::vector<rdf::Term> publishers;
  std::vector<rdf::Term> languages;
  std::vector<rdf::Term> keywords;
  std::vector<rdf::Term> themes;
  std::vector<rdf::Term> subtypes;  // dcterms:type
  std::vector<rdf::Term> was_generated_by;
  std::vector<rdf::Term> is_referenced_by;
  std::vector<rdf::Term> relations;  // dcterms:relation and its sub-properties, after closure
  IdentifierSet identifiers;
  std::vector<Parsed<PeriodOfTime>> temporal;
  std::vector<Parsed<Duration>> temporal_resolution;
  std::vector<Location> spatial;
  std::vector<Parsed<double>> spatial_resolution_m;
  std::vector<Attribution> qualified_attributions;
  std::vector<Relationship> qualified_relations;
  std::vector<QualityStatement> quality;
  /// Statements about the node that no field above represents.
  std::vector<rdf::Triple> unmodeled;

  bool has_type(const rdf::Term& type) const;
};

struct DatasetView : ResourceView {
  std::vector<rdf::Term> distributions;
};

struct DataServiceView : ResourceView {
  std::vector<rdf::Term> endpoint_urls;
  std::vector<rdf::Term> endpoint_descriptions;
  std::vector<rdf::Term> serves_datasets;
};

struct CatalogView : DatasetView {
  std::vector<rdf::Term> homepages;
  std::vector<rdf::Term> theme_taxonomies;
  std::vector<rdf::Term> records;
  std::vector<rdf::Term> parts;     // dcterms:hasPart plus its sub-properties
  std::vector<rdf::Term> datasets;  // dcat:dataset plus dcat:catalog
  std::vector<rdf::Term> services;
  std::vector<rdf::Term> catalogs;
};

using AnyResourceView = std::variant<ResourceView, DatasetView, DataServiceView, CatalogView>;

const ResourceView& base_view(const AnyResourceView& v);

struct DistributionView {
  rdf::Term node;
  std::vector<rdf::Term> types;
  std::vector<rdf::Term> titles;
  std::vector<rdf::Term> descriptions;
  std::vector<rdf::Term> issued;
  std::vector<rdf::Term> modified;
  std::vector<rdf::Term> access_urls;
  std::vector<rdf::Term> download_urls;
  std::vector<rdf::Term> media_types;
  std::vector<rdf::Term> formats;
  std::vector<Parsed<std::uint64_t>> byte_sizes;
  std::vector<rdf::Term> package_formats;
  std::vector<rdf::Term> compress_formats;
  std::vector<rdf::Term> access_services;
  std::vector<rdf::Term> conforms_to;
  std::vector<rdf::Term> licenses;
  std::vector<rdf::Term> access_rights;
  std::vector<rdf::Term> rights;
  std::vector<rdf::Term> policies;
  std::vector<Parsed<Duration>> temporal_resolution;
  std::vector<Parsed<double>> spatial_resolution_m;
  std::vector<QualityStatement> quality;
  std::vector<rdf::Triple> unmodeled;
};

struct CatalogRecordView {
  rdf::Term node;
  std::vector<rdf::Term> primary_topics;
  std::vector<rdf::Term> titles;
  std::vector<rdf::Term> issued;  // registration dates, not the resource's
  std::vector<rdf::Term> modified;
  std::vector<rdf::Term> conforms_to;
  std::vector<rdf::Triple> unmodeled;
};

/// Most specific view for the node's (inherited) types. Throws
/// Error(NotACatalogedResource) when the node has no DCAT resource type and
/// is not listed as a member of anything.
AnyResourceView view_resource(const rdf::Graph& g, const rdf::Term& node);
DistributionView view_distribution(const rdf::Graph& g, const rdf::Term& node);
CatalogRecordView view_record(const rdf::Graph& g, const rdf::Term& node);

/// Asserted types plus their ancestors in the shipped lattice.
std::vector<rdf::Term> effective_types(const rdf::Graph& g, const rdf::Term& node);
bool has_effective_type(const rdf::Graph& g, const rdf::Term& node, const rdf::Term& type);

/// Nodes typed (after inheritance) as the given class.
std::vector<rdf::Term> instances_of(const rdf::Graph& g, const rdf::Term& type);
/// Typed dcat:Distribution or the object of dcat:distribution.
std::vector<rdf::Term> distribution_nodes(const rdf::Graph& g);
/// Typed dcat:CatalogRecord or the object of dcat:record.
std::vector<rdf::Term> record_nodes(const rdf::Graph& g);
/// Typed dcat:Resource (after inheritance) or a member of a catalog through
/// dcat:dataset, dcat:service, dcat:catalog or dcterms:hasPart.
std::vector<rdf::Term> cataloged_resources(const rdf::Graph& g);

/// Parses an xsd:decimal-style lexical form (doubles too when the datatype
/// is xsd:double or xsd:float).
std::optional<double> parse_decimal_literal(const rdf::Term& literal);

/// Which requirement each modeled field answers; used by the coverage check.
struct FieldRequirement {
  const char* view;
  const char* field;
  const char* predicate;  // CURIE
  const char* requirement;
};
const std::vector<FieldRequirement>& view_field_requirements();

}  // namespace dcatkit::dcat
