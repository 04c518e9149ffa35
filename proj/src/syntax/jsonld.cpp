#include "dcatkit/syntax/jsonld.hpp"

#include <json.hpp>

#include "dcatkit/error.hpp"
#include "dcatkit/rdf/namespaces.hpp"

namespace dcatkit::syntax {

using nlohmann::json;
using rdf::Term;

namespace {

std::string node_id(const Term& t) { return t.is_blank() ? "_:" + t.value() : t.value(); }

std::string sdo_local(const Term& t, std::string_view what) {
  const std::string_view sdo = ns::sdo;
  const std::string& v = t.value();
  if (!t.is_iri() || v.size() <= sdo.size() || v.compare(0, sdo.size(), sdo) != 0) {
    throw Error(ErrorCode::UnmappedTerm, std::string(what) + " outside the Schema.org context: " + t.to_string());
  }
  return v.substr(sdo.size());
}

json value_of(const Term& o) {
  if (!o.is_literal()) return json{{"@id", node_id(o)}};
  if (!o.language().empty()) return json{{"@value", o.lexical()}, {"@language", o.language()}};
  if (o.datatype() == std::string(ns::xsd) + "string") return o.lexical();
  return json{{"@value", o.lexical()}, {"@type", o.datatype()}};
}

void append(json& slot, json value) {
  if (slot.is_null()) {
    slot = std::move(value);
  } else if (slot.is_array()) {
    slot.push_back(std::move(value));
  } else {
    slot = json::array({std::move(slot), std::move(value)});
  }
}

}  // namespace

std::string emit_jsonld(const rdf::Graph& g, int indent) {
  static const std::string rdf_type = std::string(ns::rdf) + "type";
  json doc;
  doc["@context"] = kSchemaOrgContext;
  if (g.empty()) return doc.dump(indent) + "\n";

  json nodes = json::array();
  const Term* current = nullptr;
  json node;
  for (const rdf::Triple& t : g) {
    if (current == nullptr || t.subject != *current) {
      if (current != nullptr) nodes.push_back(std::move(node));
      node = json{{"@id", node_id(t.subject)}};
      current = &t.subject;
    }
    if (t.predicate.value() == rdf_type) {
      append(node["@type"], sdo_local(t.object, "type"));
    } else {
      append(node[sdo_local(t.predicate, "predicate")], value_of(t.object));
    }
  }
  nodes.push_back(std::move(node));
  doc["@graph"] = std::move(nodes);
  return doc.dump(indent) + "\n";
}

}  // namespace dcatkit::syntax
