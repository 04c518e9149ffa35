#include "dcatkit/validate/validator.hpp"

#include <algorithm>

#include <json.hpp>

#include "dcatkit/dcat/identifiers.hpp"
#include "dcatkit/dcat/spatial.hpp"
#include "dcatkit/dcat/temporal.hpp"
#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/validate/codelists.hpp"

namespace dcatkit::validate {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;
namespace t = dcatkit::terms;

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "";
}

std::optional<Severity> severity_from_string(std::string_view s) {
  if (s == "info") return Severity::info;
  if (s == "warning" || s == "warn") return Severity::warning;
  if (s == "error") return Severity::error;
  return std::nullopt;
}

const std::vector<RuleSpec>& list_rules() {
  static const std::vector<RuleSpec> rules = {
      {"DC2-CAT-01", Severity::warning, "#116", "catalog record whose primary topic is not part of the catalog"},
      {"DC2-CAT-02", Severity::error, "#119", "dcat:themeTaxonomy value is a literal instead of a reference"},
      {"DC2-CIT-01", Severity::warning, "RDSC",
       "dataset lacks a DataCite-mandatory citation element (title, creator, publisher, issued year, identifier, "
       "resource type)"},
      {"DC2-DST-01", Severity::error, "RDISV", "distribution with no accessURL, downloadURL or accessService"},
      {"DC2-FMT-01", Severity::warning, "RDIDF", "dcterms:format holds a registered IANA media type; use dcat:mediaType"},
      {"DC2-FMT-02", Severity::warning, "RDIP", "package or compression format is not a registered IANA media type"},
      {"DC2-ID-01", Severity::info, "RDID", "dcterms:identifier is not an HTTP(S) IRI and may not dereference"},
      {"DC2-ID-02", Severity::error, "RIDALT", "adms:Identifier without skos:notation"},
      {"DC2-ID-03", Severity::info, "RIDT", "identifier notation has neither a datatype nor an adms:schemaAgency"},
      {"DC2-LIC-01", Severity::warning, "RDSA", "dcterms:license is an IRI written as a literal"},
      {"DC2-LIC-02", Severity::warning, "RDSA", "access-rights code used as dcterms:license; use dcterms:accessRights"},
      {"DC2-LIC-03", Severity::warning, "RDSA", "free-text dcterms:license; rights statements belong in dcterms:rights"},
      {"DC2-LIC-04", Severity::info, "RDSA", "odrl:hasPolicy without dcterms:license, dcterms:accessRights or dcterms:rights"},
      {"DC2-QUA-01", Severity::error, "RDQM", "dqv:QualityMeasurement without dqv:isMeasurementOf"},
      {"DC2-REL-01", Severity::error, "RQF", "qualified relation without role or target, or attribution without agent"},
      {"DC2-SPA-01", Severity::error, "RSC", "dcat:spatialResolutionInMeters is not a non-negative decimal"},
      {"DC2-SPA-02", Severity::warning, "RSC", "bbox or centroid is not parseable WKT, or the centroid lies outside the bbox"},
      {"DC2-SRV-DS-01", Severity::warning, "#180", "dcat:servesDataset points to a node that is not a dataset"},
      {"DC2-SVC-01", Severity::error, "#180", "data service without an IRI dcat:endpointURL"},
      {"DC2-SVC-02", Severity::info, "#180", "endpoint description given without dcterms:conformsTo on the service"},
      {"DC2-TMP-01", Severity::error, "RTC", "temporal coverage with no bounds, a literal value, or start after end"},
      {"DC2-TMP-02", Severity::error, "RTC", "dcat:temporalResolution is not a valid xsd:duration"},
      {"DC2-TMP-03", Severity::warning, "RTC", "dcat:startDate/endDate disagree with time:hasBeginning/hasEnd"},
      {"DC2-TYP-01", Severity::info, "RDST",
       "cataloged resource typed neither dcat:Dataset nor dcat:DataService and without dcterms:type"},
      {"DC2-TYP-02", Severity::info, "RDST", "node typed both dcat:Dataset and dcat:DataService"},
  };
  return rules;
}

const RuleSpec* find_rule(std::string_view id) {
  for (const RuleSpec& r : list_rules()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

class Sink {
 public:
  Sink(const RuleSpec& rule, std::vector<Finding>& out) : rule_(rule), out_(out) {}

  void operator()(const Term& focus, const std::optional<Term>& path, std::string message) {
    out_.push_back(Finding{rule_.id, rule_.severity, focus, path, std::move(message)});
  }

 private:
  const RuleSpec& rule_;
  std::vector<Finding>& out_;
};

struct Context {
  const Graph& g;
  const ValidationOptions& options;
};

using RuleFn = void (*)(const Context&, Sink&);

std::vector<Triple> with_predicate(const Graph& g, const Term& p) { return g.match(std::nullopt, p, std::nullopt); }

std::vector<Term> unique_objects(const Graph& g, const Term& p) {
  std::vector<Term> out;
  for (const Triple& tr : with_predicate(g, p)) out.push_back(tr.object);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Term> merged(std::vector<Term> a, const std::vector<Term>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  a.erase(std::remove_if(a.begin(), a.end(), [](const Term& x) { return x.is_literal(); }), a.end());
  return a;
}

bool has_any(const Graph& g, const Term& s, std::initializer_list<const Term*> predicates) {
  for (const Term* p : predicates) {
    if (g.object(s, *p)) return true;
  }
  return false;
}

// License triage: each license value falls into at most one of the three buckets.
enum class LicenseCase { fine, iri_literal, access_code, free_text };

LicenseCase classify_license(const Term& value) {
  if (value.is_literal()) {
    const std::string& lex = value.lexical();
    const bool iri_shaped = rdf::is_absolute_iri(lex) && (lex.find("://") != std::string::npos || lex.rfind("urn:", 0) == 0);
    return iri_shaped ? LicenseCase::iri_literal : LicenseCase::free_text;
  }
  if (value.is_iri() && access_rights_codes().count(value.value()) != 0) return LicenseCase::access_code;
  return LicenseCase::fine;
}

void license_rule(const Context& c, Sink& emit, LicenseCase wanted) {
  for (const Triple& tr : with_predicate(c.g, t::dcterms::license)) {
    if (classify_license(tr.object) != wanted) continue;
    switch (wanted) {
      case LicenseCase::iri_literal:
        emit(tr.subject, t::dcterms::license, "license " + tr.object.to_string() + " should be an IRI, not a literal");
        break;
      case LicenseCase::access_code:
        emit(tr.subject, t::dcterms::license, "<" + tr.object.value() + "> is an access-rights code; use dcterms:accessRights");
        break;
      case LicenseCase::free_text:
        emit(tr.subject, t::dcterms::license,
             "free-text license " + tr.object.to_string() + "; use a license IRI, and dcterms:rights for rights statements");
        break;
      case LicenseCase::fine: break;
    }
  }
}

void lic01(const Context& c, Sink& e) { license_rule(c, e, LicenseCase::iri_literal); }
void lic02(const Context& c, Sink& e) { license_rule(c, e, LicenseCase::access_code); }
void lic03(const Context& c, Sink& e) { license_rule(c, e, LicenseCase::free_text); }

void lic04(const Context& c, Sink& emit) {
  std::vector<Term> subjects;
  for (const Triple& tr : with_predicate(c.g, t::odrl::hasPolicy)) subjects.push_back(tr.subject);
  subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
  for (const Term& s : subjects) {
    if (!has_any(c.g, s, {&t::dcterms::license, &t::dcterms::accessRights, &t::dcterms::rights})) {
      emit(s, t::odrl::hasPolicy, "ODRL policy given without dcterms:license, dcterms:accessRights or dcterms:rights");
    }
  }
}

void fmt01(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcterms::format)) {
    if (is_registered_media_type(tr.object)) {
      emit(tr.subject, t::dcterms::format,
           "format " + tr.object.to_string() + " is the IANA media type " + media_type_of(tr.object) + "; use dcat:mediaType");
    }
  }
}

void fmt02(const Context& c, Sink& emit) {
  for (const Term* p : {&t::dcat::packageFormat, &t::dcat::compressFormat}) {
    for (const Triple& tr : with_predicate(c.g, *p)) {
      if (!is_registered_media_type(tr.object)) {
        emit(tr.subject, *p, tr.object.to_string() + " is not in the IANA media type snapshot");
      }
    }
  }
}

void dst01(const Context& c, Sink& emit) {
  for (const Term& d : dcat::distribution_nodes(c.g)) {
    if (!has_any(c.g, d, {&t::dcat::accessURL, &t::dcat::downloadURL, &t::dcat::accessService})) {
      emit(d, std::nullopt, "distribution has no dcat:accessURL, dcat:downloadURL or dcat:accessService");
    }
  }
}

void svc01(const Context& c, Sink& emit) {
  for (const Term& s : dcat::instances_of(c.g, t::dcat::DataService)) {
    const auto endpoints = c.g.objects(s, t::dcat::endpointURL);
    if (endpoints.empty()) emit(s, t::dcat::endpointURL, "data service has no dcat:endpointURL");
    for (const Term& e : endpoints) {
      if (!e.is_iri()) emit(s, t::dcat::endpointURL, "endpoint URL " + e.to_string() + " is not an IRI");
    }
  }
}

void svc02(const Context& c, Sink& emit) {
  for (const Term& s : dcat::instances_of(c.g, t::dcat::DataService)) {
    if (c.g.object(s, t::dcat::endpointDescription) && !c.g.object(s, t::dcterms::conformsTo)) {
      emit(s, t::dcterms::conformsTo, "endpoint description given; indicate the service standard with dcterms:conformsTo");
    }
  }
}

void srv_ds01(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcat::servesDataset)) {
    if (tr.object.is_literal() || !dcat::has_effective_type(c.g, tr.object, t::dcat::Dataset)) {
      emit(tr.subject, t::dcat::servesDataset, tr.object.to_string() + " is not typed as a dcat:Dataset");
    }
  }
}

void tmp01(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcterms::temporal)) {
    if (tr.object.is_literal()) {
      emit(tr.subject, t::dcterms::temporal,
           "temporal coverage " + tr.object.to_string() + " is a literal; describe it as a dcterms:PeriodOfTime");
    }
  }
  for (const Term& node : unique_objects(c.g, t::dcterms::temporal)) {
    if (node.is_literal()) continue;
    try {
      const dcat::PeriodOfTime p = dcat::parse_period(c.g, node);
      if (!p.ordered()) {
        emit(node, p.start->predicate,
             "period starts at " + p.start->value.lexical() + " after it ends at " + p.end->value.lexical());
      }
    } catch (const Error&) {
      emit(node, t::dcterms::temporal, "period of time has neither a start nor an end");
    }
  }
}

bool bounds_disagree(const dcat::TemporalBound& a, const dcat::TemporalBound& b) {
  if (a.parsed && b.parsed) return a.parsed->lower() != b.parsed->lower() || a.parsed->upper() != b.parsed->upper();
  return a.value.lexical() != b.value.lexical();
}

void tmp03(const Context& c, Sink& emit) {
  for (const Term& node : unique_objects(c.g, t::dcterms::temporal)) {
    if (node.is_literal()) continue;
    try {
      const dcat::PeriodOfTime p = dcat::parse_period(c.g, node);
      if (p.start && p.shadowed_start && bounds_disagree(*p.start, *p.shadowed_start)) {
        emit(node, t::dcat::startDate,
             "dcat:startDate " + p.start->value.lexical() + " disagrees with time:hasBeginning " +
                 p.shadowed_start->value.lexical() + "; using dcat:startDate");
      }
      if (p.end && p.shadowed_end && bounds_disagree(*p.end, *p.shadowed_end)) {
        emit(node, t::dcat::endDate,
             "dcat:endDate " + p.end->value.lexical() + " disagrees with time:hasEnd " + p.shadowed_end->value.lexical() +
                 "; using dcat:endDate");
      }
    } catch (const Error&) {
    }
  }
}

void tmp02(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcat::temporalResolution)) {
    std::string problem;
    if (!tr.object.is_literal()) {
      problem = "temporal resolution must be an xsd:duration literal";
    } else {
      try {
        dcat::parse_duration(tr.object.lexical());
      } catch (const Error& e) {
        problem = "invalid xsd:duration \"" + tr.object.lexical() + "\"";
      }
    }
    if (!problem.empty()) emit(tr.subject, t::dcat::temporalResolution, problem);
  }
}

void spa01(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcat::spatialResolutionInMeters)) {
    const auto v = dcat::parse_decimal_literal(tr.object);
    if (!v || *v < 0) {
      emit(tr.subject, t::dcat::spatialResolutionInMeters,
           "spatial resolution " + tr.object.to_string() + " is not a non-negative decimal");
    }
  }
}

void spa02(const Context& c, Sink& emit) {
  std::vector<Term> nodes;
  for (const Term* p : {&t::dcat::bbox, &t::dcat::centroid}) {
    for (const Triple& tr : with_predicate(c.g, *p)) nodes.push_back(tr.subject);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (const Term& node : nodes) {
    const dcat::Location loc = dcat::parse_location(c.g, node);
    for (const dcat::Geometry& b : loc.bboxes) {
      if (b.unparseable) {
        emit(node, t::dcat::bbox, "bbox " + b.literal.to_string() + " is not parseable WKT");
      } else if (b.shape && !std::holds_alternative<dcat::WktPolygon>(*b.shape)) {
        emit(node, t::dcat::bbox, "bbox " + b.literal.to_string() + " is not a POLYGON");
      }
    }
    for (const dcat::Geometry& ce : loc.centroids) {
      if (ce.unparseable) {
        emit(node, t::dcat::centroid, "centroid " + ce.literal.to_string() + " is not parseable WKT");
      } else if (ce.shape && !std::holds_alternative<dcat::WktPoint>(*ce.shape)) {
        emit(node, t::dcat::centroid, "centroid " + ce.literal.to_string() + " is not a POINT");
      }
    }
    for (const dcat::Geometry& b : loc.bboxes) {
      const auto* poly = b.shape ? std::get_if<dcat::WktPolygon>(&*b.shape) : nullptr;
      if (poly == nullptr) continue;
      for (const dcat::Geometry& ce : loc.centroids) {
        const auto* point = ce.shape ? std::get_if<dcat::WktPoint>(&*ce.shape) : nullptr;
        if (point != nullptr && !dcat::within_extents(*poly, *point)) {
          emit(node, t::dcat::centroid, "centroid " + ce.literal.to_string() + " lies outside the bbox extents");
        }
      }
    }
  }
}

void typ01(const Context& c, Sink& emit) {
  for (const Term& r : dcat::cataloged_resources(c.g)) {
    if (dcat::has_effective_type(c.g, r, t::dcat::Dataset) || dcat::has_effective_type(c.g, r, t::dcat::DataService)) {
      continue;
    }
    if (!c.g.object(r, t::dcterms::type)) {
      emit(r, t::dcterms::type,
           "resource is typed neither dcat:Dataset nor dcat:DataService; indicate its kind with dcterms:type");
    }
  }
}

void typ02(const Context& c, Sink& emit) {
  for (const Term& r : dcat::instances_of(c.g, t::dcat::Dataset)) {
    if (dcat::has_effective_type(c.g, r, t::dcat::DataService)) {
      emit(r, t::rdf_::type, "node is typed both dcat:Dataset and dcat:DataService; the data service view is used");
    }
  }
}

void cit01(const Context& c, Sink& emit) {
  for (const Term& d : dcat::instances_of(c.g, t::dcat::Dataset)) {
    auto missing = [&](const Term& path, const char* element) {
      emit(d, path, std::string("missing citation element: ") + element);
    };
    if (!c.g.object(d, t::dcterms::title)) missing(t::dcterms::title, "title");
    if (!c.g.object(d, t::dcterms::creator)) missing(t::dcterms::creator, "creator");
    if (!c.g.object(d, t::dcterms::publisher)) missing(t::dcterms::publisher, "publisher");
    const auto issued = c.g.objects(d, t::dcterms::issued);
    if (std::none_of(issued.begin(), issued.end(),
                     [](const Term& v) {
                       const std::string& lex = v.lexical();
                       return v.is_literal() && lex.size() >= 4 &&
                              std::all_of(lex.begin(), lex.begin() + 4, [](char ch) { return ch >= '0' && ch <= '9'; });
                     })) {
      missing(t::dcterms::issued, "publication year");
    }
    bool identified = c.g.object(d, t::dcterms::identifier).has_value();
    for (const dcat::AltIdentifier& alt : dcat::resolve_identifiers(c.g, d).alternates) {
      identified = identified || alt.notation.has_value();
    }
    if (!identified) missing(t::dcterms::identifier, "identifier");
    if (!c.g.object(d, t::dcterms::type)) missing(t::dcterms::type, "resource type");
  }
}

void id01(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcterms::identifier)) {
    const Term& v = tr.object;
    const bool http = v.is_iri() ? dcat::is_http_form(v.value()) : v.is_literal() && dcat::is_http_form(v.lexical());
    if (v.is_literal() && !http) {
      emit(tr.subject, t::dcterms::identifier,
           "identifier \"" + v.lexical() + "\" is not an HTTP(S) IRI; dereferenceable identifiers are preferred");
    } else if (http && c.options.network_ids && c.options.dereference && !c.options.dereference(v.value())) {
      emit(tr.subject, t::dcterms::identifier, "identifier <" + v.value() + "> does not dereference");
    }
  }
}

std::vector<Term> identifier_nodes(const Graph& g) {
  return merged(unique_objects(g, t::adms::identifier), dcat::instances_of(g, t::adms::Identifier));
}

void id02(const Context& c, Sink& emit) {
  for (const Term& node : identifier_nodes(c.g)) {
    if (!c.g.object(node, t::skos::notation)) emit(node, t::skos::notation, "adms:Identifier has no skos:notation");
  }
}

void id03(const Context& c, Sink& emit) {
  for (const Term& node : identifier_nodes(c.g)) {
    const auto notation = c.g.object(node, t::skos::notation);
    if (!notation) continue;
    dcat::AltIdentifier alt{node, notation, {}, {}};
    if (alt.notation_datatype().empty() && !c.g.object(node, t::adms::schemaAgency)) {
      emit(node, t::skos::notation,
           "notation " + notation->to_string() + " has no identifier-type datatype and no adms:schemaAgency");
    }
  }
}

void cat01(const Context& c, Sink& emit) {
  for (const Term& cat : dcat::instances_of(c.g, t::dcat::Catalog)) {
    std::vector<Term> parts;
    for (const Term* p : {&t::dcterms::hasPart, &t::dcat::dataset, &t::dcat::service, &t::dcat::catalog}) {
      parts = merged(std::move(parts), c.g.objects(cat, *p));
    }
    for (const Term& record : c.g.objects(cat, t::dcat::record)) {
      if (record.is_literal()) continue;
      for (const Term& topic : c.g.objects(record, t::foaf::primaryTopic)) {
        if (!std::binary_search(parts.begin(), parts.end(), topic)) {
          emit(record, t::foaf::primaryTopic,
               "record describes " + topic.to_string() + ", which is not part of catalog " + cat.to_string());
        }
      }
    }
  }
}

void cat02(const Context& c, Sink& emit) {
  for (const Triple& tr : with_predicate(c.g, t::dcat::themeTaxonomy)) {
    if (tr.object.is_literal()) {
      emit(tr.subject, t::dcat::themeTaxonomy, "theme taxonomy " + tr.object.to_string() + " must be a reference, not a literal");
    }
  }
}

void qua01(const Context& c, Sink& emit) {
  const auto nodes = merged(unique_objects(c.g, t::dqv::hasQualityMeasurement),
                            dcat::instances_of(c.g, t::dqv::QualityMeasurement));
  for (const Term& m : nodes) {
    if (!c.g.object(m, t::dqv::isMeasurementOf)) {
      emit(m, t::dqv::isMeasurementOf, "quality measurement does not name its dqv:Metric");
    }
  }
}

void rel01(const Context& c, Sink& emit) {
  const auto relationships = merged(unique_objects(c.g, t::dcat::qualifiedRelation),
                                    dcat::instances_of(c.g, t::dcat::Relationship));
  for (const Term& r : relationships) {
    if (!c.g.object(r, t::dcat::hadRole)) emit(r, t::dcat::hadRole, "qualified relation has no dcat:hadRole");
    if (!c.g.object(r, t::dcterms::relation)) emit(r, t::dcterms::relation, "qualified relation has no dcterms:relation target");
  }
  const auto attributions = merged(unique_objects(c.g, t::prov::qualifiedAttribution),
                                   dcat::instances_of(c.g, t::prov::Attribution));
  for (const Term& a : attributions) {
    if (!c.g.object(a, t::prov::agent)) emit(a, t::prov::agent, "attribution has no prov:agent");
  }
}

const std::map<std::string, RuleFn>& implementations() {
  static const std::map<std::string, RuleFn> fns = {
      {"DC2-CAT-01", cat01}, {"DC2-CAT-02", cat02}, {"DC2-CIT-01", cit01}, {"DC2-DST-01", dst01},
      {"DC2-FMT-01", fmt01}, {"DC2-FMT-02", fmt02}, {"DC2-ID-01", id01},   {"DC2-ID-02", id02},
      {"DC2-ID-03", id03},   {"DC2-LIC-01", lic01}, {"DC2-LIC-02", lic02}, {"DC2-LIC-03", lic03},
      {"DC2-LIC-04", lic04}, {"DC2-QUA-01", qua01}, {"DC2-REL-01", rel01}, {"DC2-SPA-01", spa01},
      {"DC2-SPA-02", spa02}, {"DC2-SRV-DS-01", srv_ds01}, {"DC2-SVC-01", svc01}, {"DC2-SVC-02", svc02},
      {"DC2-TMP-01", tmp01}, {"DC2-TMP-02", tmp02}, {"DC2-TMP-03", tmp03}, {"DC2-TYP-01", typ01},
      {"DC2-TYP-02", typ02},
  };
  return fns;
}

std::string term_text(const Term& term) { return term.is_blank() ? "_:" + term.value() : term.value(); }

}  // namespace

bool ValidationReport::conforms() const { return count(Severity::error) == 0; }

std::size_t ValidationReport::count(Severity s) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [s](const Finding& f) { return f.severity == s; }));
}

std::map<Severity, std::size_t> ValidationReport::counts() const {
  return {{Severity::error, count(Severity::error)},
          {Severity::warning, count(Severity::warning)},
          {Severity::info, count(Severity::info)}};
}

std::string ValidationReport::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["conforms"] = conforms();
  doc["counts"] = {{"error", count(Severity::error)}, {"warning", count(Severity::warning)}, {"info", count(Severity::info)}};
  doc["findings"] = nlohmann::ordered_json::array();
  for (const Finding& f : findings) {
    nlohmann::ordered_json item;
    item["rule"] = f.rule;
    item["severity"] = to_string(f.severity);
    item["focus"] = term_text(f.focus);
    item["path"] = f.path ? nlohmann::ordered_json(f.path->value()) : nlohmann::ordered_json(nullptr);
    item["message"] = f.message;
    doc["findings"].push_back(std::move(item));
  }
  return doc.dump(indent) + "\n";
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const Finding& f : findings) {
    out += f.rule + " " + std::string(to_string(f.severity)) + " " + f.focus.to_string();
    if (f.path) out += " " + f.path->to_string();
    out += ": " + f.message + "\n";
  }
  out += conforms() ? "conforms" : "does not conform";
  out += " (" + std::to_string(count(Severity::error)) + " errors, " + std::to_string(count(Severity::warning)) +
         " warnings, " + std::to_string(count(Severity::info)) + " info)\n";
  return out;
}

ValidationReport validate(const Graph& g, const ValidationOptions& options) {
  if (options.rules) {
    for (const std::string& id : *options.rules) {
      if (find_rule(id) == nullptr) throw Error(ErrorCode::UnknownRuleId, "unknown rule id '" + id + "'");
    }
  }
  const Context ctx{g, options};
  ValidationReport report;
  for (const RuleSpec& rule : list_rules()) {
    if (rule.severity < options.min_severity) continue;
    if (options.rules && options.rules->count(rule.id) == 0) continue;
    Sink sink(rule, report.findings);
    implementations().at(rule.id)(ctx, sink);
  }
  auto key = [](const Finding& f) {
    return std::tie(f.rule, f.focus, f.path, f.message);
  };
  std::sort(report.findings.begin(), report.findings.end(),
            [&key](const Finding& a, const Finding& b) { return key(a) < key(b); });
  report.findings.erase(std::unique(report.findings.begin(), report.findings.end()), report.findings.end());
  return report;
}

}  // namespace dcatkit::validate
