#include "dcatkit/dcat/views.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <set>

#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/error.hpp"

namespace dcatkit::dcat {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

void unite(std::vector<Term>& into, const std::vector<Term>& more) {
  into.insert(into.end(), more.begin(), more.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

// Reads predicates off one node and remembers which ones were consumed.
class Projector {
 public:
  Projector(const Graph& g, const Term& node) : g_(g), node_(node) {}

  std::vector<Term> take(const Term& predicate) {
    used_.insert(predicate);
    return g_.objects(node_, predicate);
  }

  std::vector<Term> take_all(const std::set<std::string>& predicates) {
    std::vector<Term> out;
    for (const std::string& p : predicates) unite(out, take(Term::iri(p)));
    return out;
  }

  std::vector<Triple> leftovers() const {
    std::vector<Triple> out;
    for (const Triple& t : g_.match(node_, std::nullopt, std::nullopt)) {
      if (t.predicate != terms::rdf_::type && used_.count(t.predicate) == 0) out.push_back(t);
    }
    return out;
  }

 private:
  const Graph& g_;
  const Term& node_;
  std::set<Term> used_;
};

std::vector<Parsed<Duration>> durations(const std::vector<Term>& values) {
  std::vector<Parsed<Duration>> out;
  for (const Term& v : values) {
    Parsed<Duration> p{v, std::nullopt};
    if (v.is_literal()) {
      try {
        p.value = parse_duration(v.lexical());
      } catch (const Error&) {
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Parsed<double>> decimals(const std::vector<Term>& values) {
  std::vector<Parsed<double>> out;
  for (const Term& v : values) out.push_back({v, parse_decimal_literal(v)});
  return out;
}

std::vector<QualityStatement> quality_of(const Graph& g, Projector& pr, const std::vector<Term>& conforms_to) {
  std::vector<QualityStatement> out;
  for (const Term& body : pr.take(terms::dqv::hasQualityAnnotation)) {
    out.push_back({QualityKind::annotation, body, std::nullopt});
  }
  for (const Term& body : pr.take(terms::dqv::hasQualityMeasurement)) {
    std::optional<Term> metric;
    if (body.is_resource()) metric = g.object(body, terms::dqv::isMeasurementOf);
    out.push_back({QualityKind::measurement, body, metric});
  }
  for (const Term& body : conforms_to) {
    const bool policy = body.is_resource() && has_effective_type(g, body, terms::dqv::QualityPolicy);
    out.push_back({policy ? QualityKind::policy : QualityKind::conformance, body, std::nullopt});
  }
  return out;
}

void fill_resource(const Graph& g, const Term& node, ResourceView& v, Projector& pr) {
  const VocabularyAxioms& ax = load_vocabulary();
  v.node = node;
  v.types = effective_types(g, node);
  v.titles = pr.take(terms::dcterms::title);
  v.descriptions = pr.take(terms::dcterms::description);
  v.issued = pr.take(terms::dcterms::issued);
  v.modified = pr.take(terms::dcterms::modified);
  v.licenses = pr.take(terms::dcterms::license);
  v.access_rights = pr.take(terms::dcterms::accessRights);
  v.rights = pr.take(terms::dcterms::rights);
  v.policies = pr.take(terms::odrl::hasPolicy);
  v.conforms_to = pr.take(terms::dcterms::conformsTo);
  v.landing_pages = pr.take(terms::dcat::landingPage);
  v.contact_points = pr.take(terms::dcat::contactPoint);
  v.creators = pr.take(terms::dcterms::creator);
  v.publishers = pr.take(terms::dcterms::publisher);
  v.languages = pr.take(terms::dcterms::language);
  v.keywords = pr.take(terms::dcat::keyword);
  v.themes = pr.take(terms::dcat::theme);
  v.subtypes = pr.take(terms::dcterms::type);
  v.was_generated_by = pr.take(terms::prov::wasGeneratedBy);
  v.is_referenced_by = pr.take(terms::dcterms::isReferencedBy);
  v.relations = pr.take_all(ax.property_descendants(terms::dcterms::relation.value()));

  pr.take(terms::dcterms::identifier);
  pr.take(terms::adms::identifier);
  v.identifiers = resolve_identifiers(g, node);

  for (const Term& t : pr.take(terms::dcterms::temporal)) {
    Parsed<PeriodOfTime> p{t, std::nullopt};
    try {
      p.value = parse_period(g, t);
    } catch (const Error&) {
    }
    v.temporal.push_back(std::move(p));
  }
  v.temporal_resolution = durations(pr.take(terms::dcat::temporalResolution));
  for (const Term& s : pr.take(terms::dcterms::spatial)) v.spatial.push_back(parse_location(g, s));
  v.spatial_resolution_m = decimals(pr.take(terms::dcat::spatialResolutionInMeters));

  for (const Term& a : pr.take(terms::prov::qualifiedAttribution)) {
    Attribution att{a, std::nullopt, {}};
    if (a.is_resource()) {
      att.agent = g.object(a, terms::prov::agent);
      att.roles = g.objects(a, terms::dcat::hadRole);
    }
    v.qualified_attributions.push_back(std::move(att));
  }
  for (const Term& r : pr.take(terms::dcat::qualifiedRelation)) {
    Relationship rel{r, {}, {}};
    if (r.is_resource()) {
      rel.targets = g.objects(r, terms::dcterms::relation);
      rel.roles = g.objects(r, terms::dcat::hadRole);
    }
    v.qualified_relations.push_back(std::move(rel));
  }
  v.quality = quality_of(g, pr, v.conforms_to);
}

bool is_member(const Graph& g, const Term& node) {
  for (const Term* p : {&terms::dcterms::hasPart, &terms::dcat::dataset, &terms::dcat::service, &terms::dcat::catalog}) {
    if (!g.match(std::nullopt, *p, node).empty()) return true;
  }
  return false;
}

}  // namespace

bool ResourceView::has_type(const Term& type) const {
  return std::binary_search(types.begin(), types.end(), type);
}

const ResourceView& base_view(const AnyResourceView& v) {
  return std::visit([](const auto& view) -> const ResourceView& { return view; }, v);
}

std::vector<Term> effective_types(const Graph& g, const Term& node) {
  const VocabularyAxioms& ax = load_vocabulary();
  std::vector<Term> types = g.objects(node, terms::rdf_::type);
  std::vector<Term> inherited;
  for (const Term& t : types) {
    if (!t.is_iri()) continue;
    for (const std::string& parent : ax.class_ancestors(t.value())) inherited.push_back(Term::iri(parent));
  }
  unite(types, inherited);
  return types;
}

bool has_effective_type(const Graph& g, const Term& node, const Term& type) {
  if (g.has_type(node, type)) return true;
  const VocabularyAxioms& ax = load_vocabulary();
  for (const Term& t : g.objects(node, terms::rdf_::type)) {
    if (t.is_iri() && ax.is_subclass_of(t.value(), type.value())) return true;
  }
  return false;
}

std::vector<Term> instances_of(const Graph& g, const Term& type) {
  std::vector<Term> out;
  for (const std::string& cls : load_vocabulary().class_descendants(type.value())) {
    unite(out, g.subjects(terms::rdf_::type, Term::iri(cls)));
  }
  return out;
}

std::vector<Term> distribution_nodes(const Graph& g) {
  std::vector<Term> out = instances_of(g, terms::dcat::Distribution);
  for (const Triple& t : g.match(std::nullopt, terms::dcat::distribution, std::nullopt)) {
    if (t.object.is_resource()) out.push_back(t.object);
  }
  unite(out, {});
  return out;
}

std::vector<Term> record_nodes(const Graph& g) {
  std::vector<Term> out = instances_of(g, terms::dcat::CatalogRecord);
  for (const Triple& t : g.match(std::nullopt, terms::dcat::record, std::nullopt)) {
    if (t.object.is_resource()) out.push_back(t.object);
  }
  unite(out, {});
  return out;
}

std::vector<Term> cataloged_resources(const Graph& g) {
  std::vector<Term> out = instances_of(g, terms::dcat::Resource);
  for (const Term* p : {&terms::dcterms::hasPart, &terms::dcat::dataset, &terms::dcat::service, &terms::dcat::catalog}) {
    for (const Triple& t : g.match(std::nullopt, *p, std::nullopt)) {
      if (t.object.is_resource()) out.push_back(t.object);
    }
  }
  unite(out, {});
  return out;
}

std::optional<double> parse_decimal_literal(const Term& literal) {
  if (!literal.is_literal()) return std::nullopt;
  const std::string& lex = literal.lexical();
  const std::string& dt = literal.datatype();
  const bool floating = dt == std::string(ns::xsd) + "double" || dt == std::string(ns::xsd) + "float";
  if (!floating) {
    static const std::regex decimal(R"([+-]?(\d+(\.\d*)?|\.\d+))");
    if (!std::regex_match(lex, decimal)) return std::nullopt;
  }
  const char* begin = lex.data();
  const char* end = lex.data() + lex.size();
  if (begin != end && *begin == '+') ++begin;
  double value = 0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

AnyResourceView view_resource(const Graph& g, const Term& node) {
  if (!node.is_resource()) throw Error(ErrorCode::NotACatalogedResource, "literal is not a resource: " + node.to_string());
  const std::vector<Term> types = effective_types(g, node);
  auto typed = [&types](const Term& t) { return std::binary_search(types.begin(), types.end(), t); };
  if (!typed(terms::dcat::Resource) && !is_member(g, node)) {
    throw Error(ErrorCode::NotACatalogedResource, node.to_string() + " is not a cataloged resource");
  }
  Projector pr(g, node);
  if (typed(terms::dcat::Catalog)) {
    CatalogView v;
    fill_resource(g, node, v, pr);
    v.distributions = pr.take(terms::dcat::distribution);
    v.homepages = pr.take(terms::foaf::homepage);
    v.theme_taxonomies = pr.take(terms::dcat::themeTaxonomy);
    v.records = pr.take(terms::dcat::record);
    v.services = pr.take(terms::dcat::service);
    v.catalogs = pr.take(terms::dcat::catalog);
    v.datasets = pr.take(terms::dcat::dataset);
    unite(v.datasets, v.catalogs);
    v.parts = pr.take(terms::dcterms::hasPart);
    unite(v.parts, v.datasets);
    unite(v.parts, v.services);
    v.unmodeled = pr.leftovers();
    return v;
  }
  if (typed(terms::dcat::DataService)) {
    DataServiceView v;
    fill_resource(g, node, v, pr);
    v.endpoint_urls = pr.take(terms::dcat::endpointURL);
    v.endpoint_descriptions = pr.take(terms::dcat::endpointDescription);
    v.serves_datasets = pr.take(terms::dcat::servesDataset);
    v.unmodeled = pr.leftovers();
    return v;
  }
  if (typed(terms::dcat::Dataset)) {
    DatasetView v;
    fill_resource(g, node, v, pr);
    v.distributions = pr.take(terms::dcat::distribution);
    v.unmodeled = pr.leftovers();
    return v;
  }
  ResourceView v;
  fill_resource(g, node, v, pr);
  v.unmodeled = pr.leftovers();
  return v;
}

DistributionView view_distribution(const Graph& g, const Term& node) {
  DistributionView v;
  Projector pr(g, node);
  v.node = node;
  v.types = effective_types(g, node);
  v.titles = pr.take(terms::dcterms::title);
  v.descriptions = pr.take(terms::dcterms::description);
  v.issued = pr.take(terms::dcterms::issued);
  v.modified = pr.take(terms::dcterms::modified);
  v.access_urls = pr.take(terms::dcat::accessURL);
  v.download_urls = pr.take(terms::dcat::downloadURL);
  v.media_types = pr.take(terms::dcat::mediaType);
  v.formats = pr.take(terms::dcterms::format);
  for (const Term& b : pr.take(terms::dcat::byteSize)) {
    Parsed<std::uint64_t> p{b, std::nullopt};
    if (b.is_literal()) {
      std::uint64_t n = 0;
      const std::string& lex = b.lexical();
      const char* begin = lex.data() + (!lex.empty() && lex[0] == '+' ? 1 : 0);
      const auto [ptr, ec] = std::from_chars(begin, lex.data() + lex.size(), n);
      if (ec == std::errc() && ptr == lex.data() + lex.size() && begin != ptr) p.value = n;
    }
    v.byte_sizes.push_back(std::move(p));
  }
  v.package_formats = pr.take(terms::dcat::packageFormat);
  v.compress_formats = pr.take(terms::dcat::compressFormat);
  v.access_services = pr.take(terms::dcat::accessService);
  v.conforms_to = pr.take(terms::dcterms::conformsTo);
  v.licenses = pr.take(terms::dcterms::license);
  v.access_rights = pr.take(terms::dcterms::accessRights);
  v.rights = pr.take(terms::dcterms::rights);
  v.policies = pr.take(terms::odrl::hasPolicy);
  v.temporal_resolution = durations(pr.take(terms::dcat::temporalResolution));
  v.spatial_resolution_m = decimals(pr.take(terms::dcat::spatialResolutionInMeters));
  v.quality = quality_of(g, pr, v.conforms_to);
  pr.take(terms::dcterms::relation);
  v.unmodeled = pr.leftovers();
  return v;
}

CatalogRecordView view_record(const Graph& g, const Term& node) {
  CatalogRecordView v;
  Projector pr(g, node);
  v.node = node;
  v.primary_topics = pr.take(terms::foaf::primaryTopic);
  v.titles = pr.take(terms::dcterms::title);
  v.issued = pr.take(terms::dcterms::issued);
  v.modified = pr.take(terms::dcterms::modified);
  v.conforms_to = pr.take(terms::dcterms::conformsTo);
  v.unmodeled = pr.leftovers();
  return v;
}

const std::vector<FieldRequirement>& view_field_requirements() {
  static const std::vector<FieldRequirement> table = {
      {"ResourceView", "access_rights", "dcterms:accessRights", "RDSA"},
      {"ResourceView", "licenses", "dcterms:license", "RDSA"},
      {"ResourceView", "rights", "dcterms:rights", "RDSA"},
      {"DistributionView", "access_rights", "dcterms:accessRights", "RDSA"},
      {"ResourceView", "conforms_to", "dcterms:conformsTo", "RDIS"},
      {"DistributionView", "conforms_to", "dcterms:conformsTo", "RDIS"},
      {"ResourceView", "spatial", "dcterms:spatial", "RSC"},
      {"ResourceView", "spatial_resolution_m", "dcat:spatialResolutionInMeters", "RSC"},
      {"ResourceView", "temporal", "dcterms:temporal", "RTC"},
      {"ResourceView", "temporal_resolution", "dcat:temporalResolution", "RTC"},
      {"ResourceView", "relations", "dcterms:relation", "RRDS"},
      {"ResourceView", "qualified_relations", "dcat:qualifiedRelation", "RRDS"},
      {"ResourceView", "was_generated_by", "prov:wasGeneratedBy", "RPR"},
      {"ResourceView", "is_referenced_by", "dcterms:isReferencedBy", "RDSP"},
      {"ResourceView", "subtypes", "dcterms:type", "RDST"},
      {"ResourceView", "qualified_attributions", "prov:qualifiedAttribution", "RQF"},
      {"DistributionView", "media_types", "dcat:mediaType", "RDIDF"},
      {"DistributionView", "package_formats", "dcat:packageFormat", "RDIP"},
      {"DistributionView", "compress_formats", "dcat:compressFormat", "RDIP"},
      {"DistributionView", "access_services", "dcat:accessService", "RDISV"},
      {"ResourceView", "identifiers.primary", "dcterms:identifier", "RDID"},
      {"ResourceView", "identifiers.alternates", "adms:identifier", "RIDALT"},
      {"AltIdentifier", "notation", "skos:notation", "RIDT"},
      {"ResourceView", "quality", "dqv:hasQualityAnnotation", "RDQIF"},
      {"ResourceView", "quality", "dqv:hasQualityMeasurement", "RDQM"},
      {"ResourceView", "creators", "dcterms:creator", "RDSC"},
  };
  return table;
}

}  // namespace dcatkit::dcat
