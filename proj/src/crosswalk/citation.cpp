#include "dcatkit/crosswalk/citation.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include <json.hpp>

#include "dcatkit/dcat/identifiers.hpp"
#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/error.hpp"

namespace dcatkit::crosswalk {

using rdf::Graph;
using rdf::Term;

namespace {

// Literal preference: untagged, then English, then anything, in term order.
std::optional<std::string> best_text(const std::vector<Term>& values) {
  const Term* chosen = nullptr;
  int rank = 4;
  for (const Term& v : values) {
    int r = 3;
    if (v.is_literal()) r = v.language().empty() ? 0 : (v.language() == "en" || v.language().rfind("en-", 0) == 0) ? 1 : 2;
    if (r < rank) {
      rank = r;
      chosen = &v;
    }
  }
  if (chosen == nullptr) return std::nullopt;
  return chosen->is_blank() ? "_:" + chosen->value() : chosen->value();
}

std::string local_name(const std::string& iri) {
  const auto cut = iri.find_last_of("#/");
  std::string local = cut == std::string::npos ? iri : iri.substr(cut + 1);
  return local.empty() ? iri : local;
}

std::optional<std::string> label_of(const Graph& g, const Term& node) {
  if (node.is_literal()) return node.lexical();
  for (const Term* p : {&terms::foaf::name, &terms::rdfs::label, &terms::skos::prefLabel}) {
    std::vector<Term> names = g.objects(node, *p);
    names.erase(std::remove_if(names.begin(), names.end(), [](const Term& t) { return !t.is_literal(); }), names.end());
    if (auto text = best_text(names)) return text;
  }
  static const Term vcard_fn = rdf::iri(ns::vcard, "fn");
  std::vector<Term> fns = g.objects(node, vcard_fn);
  if (auto text = best_text(fns)) return text;
  return std::nullopt;
}

std::string agent_name(const Graph& g, const Term& agent) {
  if (auto name = label_of(g, agent)) return *name;
  return agent.is_iri() ? agent.value() : "[unnamed]";
}

bool is_list_node(const Graph& g, const Term& node) {
  return node.is_resource() && g.object(node, terms::rdf_::first).has_value();
}

std::vector<Term> list_items(const Graph& g, Term node) {
  std::vector<Term> items;
  std::set<Term> seen;
  while (node != terms::rdf_::nil && seen.insert(node).second) {
    if (auto first = g.object(node, terms::rdf_::first)) items.push_back(*first);
    auto rest = g.object(node, terms::rdf_::rest);
    if (!rest) break;
    node = *rest;
  }
  return items;
}

std::optional<std::string> doi_of(const std::string& text) {
  static const std::regex doi(R"(^(?:https?://(?:dx\.)?doi\.org/|doi:)?(10\.\d{4,}(?:\.\d+)*/\S+)$)",
                              std::regex::icase);
  std::smatch m;
  if (std::regex_match(text, m, doi)) return "https://doi.org/" + m[1].str();
  return std::nullopt;
}

bool pick_identifier(const Graph& g, const Term& dataset, CitationRecord& rec) {
  const std::vector<Term> ids = g.objects(dataset, terms::dcterms::identifier);
  // Dereferenceable DOI first.
  for (const Term& id : ids) {
    if (dcat::is_http_form(id.value())) {
      if (auto doi = doi_of(id.value())) {
        rec.identifier = *doi;
        rec.identifier_scheme = "DOI";
        return true;
      }
    }
  }
  for (const Term& id : ids) {
    if (auto doi = doi_of(id.value())) {
      rec.identifier = *doi;
      rec.identifier_scheme = "DOI";
      return true;
    }
  }
  if (!ids.empty()) {
    const Term& id = ids.front();
    rec.identifier = id.is_blank() ? "_:" + id.value() : id.value();
    rec.identifier_scheme = dcat::is_http_form(rec.identifier) ? "URL" : "local";
    return true;
  }
  for (const dcat::AltIdentifier& alt : dcat::resolve_identifiers(g, dataset).alternates) {
    if (!alt.notation) continue;
    rec.identifier = alt.notation->value();
    if (const std::string dt = alt.notation_datatype(); !dt.empty()) {
      rec.identifier_scheme = local_name(dt);
    } else if (!alt.schema_agencies.empty()) {
      rec.identifier_scheme = agent_name(g, alt.schema_agencies.front());
    } else {
      rec.identifier_scheme = "local";
    }
    return true;
  }
  return false;
}

}  // namespace

CitationRecord to_citation(const Graph& g, const Term& dataset) {
  if (!dataset.is_resource() || !dcat::has_effective_type(g, dataset, terms::dcat::Dataset)) {
    throw Error(ErrorCode::NotADataset, dataset.to_string() + " is not a dcat:Dataset");
  }
  CitationRecord rec;

  if (!pick_identifier(g, dataset, rec)) rec.missing.push_back("identifier");

  const std::vector<Term> creators = g.objects(dataset, terms::dcterms::creator);
  std::vector<std::string> unordered;
  for (const Term& c : creators) {
    if (is_list_node(g, c)) {
      for (const Term& item : list_items(g, c)) rec.creators.push_back(agent_name(g, item));
    } else {
      unordered.push_back(agent_name(g, c));
    }
  }
  std::sort(unordered.begin(), unordered.end());
  rec.creators.insert(rec.creators.end(), unordered.begin(), unordered.end());
  if (creators.empty()) rec.missing.push_back("creators");

  if (auto title = best_text(g.objects(dataset, terms::dcterms::title))) {
    rec.title = *title;
  } else {
    rec.missing.push_back("title");
  }

  const std::vector<Term> publishers = g.objects(dataset, terms::dcterms::publisher);
  if (!publishers.empty()) {
    std::vector<std::string> names;
    for (const Term& p : publishers) names.push_back(agent_name(g, p));
    std::sort(names.begin(), names.end());
    rec.publisher = names.front();
  } else {
    rec.missing.push_back("publisher");
  }

  for (const Term& issued : g.objects(dataset, terms::dcterms::issued)) {
    const std::string& lex = issued.lexical();
    if (!issued.is_literal() || lex.size() < 4 ||
        !std::all_of(lex.begin(), lex.begin() + 4, [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      continue;
    }
    const int year = std::stoi(lex.substr(0, 4));
    if (!rec.publication_year || year < *rec.publication_year) rec.publication_year = year;
  }
  if (!rec.publication_year) rec.missing.push_back("publication_year");

  const std::vector<Term> types = g.objects(dataset, terms::dcterms::type);
  if (!types.empty()) {
    const Term& type = types.front();
    if (auto label = label_of(g, type)) {
      rec.resource_type = *label;
    } else {
      rec.resource_type = type.is_iri() ? local_name(type.value()) : "_:" + type.value();
    }
  } else {
    rec.missing.push_back("resource_type");
  }
  return rec;
}

std::string format_citation(const CitationRecord& rec) {
  std::string creators;
  for (const std::string& c : rec.creators) creators += (creators.empty() ? "" : "; ") + c;
  if (creators.empty()) creators = "[creator unknown]";
  const std::string year = rec.publication_year ? std::to_string(*rec.publication_year) : "[year unknown]";
  const std::string title = rec.title.empty() ? "[title unknown]" : rec.title;
  const std::string publisher = rec.publisher.empty() ? "[publisher unknown]" : rec.publisher;
  const std::string identifier = rec.identifier.empty() ? "[identifier unknown]" : rec.identifier;
  return creators + " (" + year + "): " + title + ". " + publisher + ". " + identifier;
}

std::string CitationRecord::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["identifier"] = identifier.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(identifier);
  doc["identifier_scheme"] = identifier_scheme.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(identifier_scheme);
  doc["creators"] = creators;
  doc["title"] = title.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(title);
  doc["publisher"] = publisher.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(publisher);
  doc["publication_year"] = publication_year ? nlohmann::ordered_json(*publication_year) : nlohmann::ordered_json(nullptr);
  doc["resource_type"] = resource_type.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(resource_type);
  doc["complete"] = complete();
  doc["missing"] = missing;
  return doc.dump(indent) + "\n";
}

}  // namespace dcatkit::crosswalk
