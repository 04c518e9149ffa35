#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcatkit/crosswalk/citation.hpp"
#include "dcatkit/crosswalk/schema_org.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/syntax/format.hpp"
#include "dcatkit/syntax/jsonld.hpp"
#include "dcatkit/syntax/ntriples.hpp"
#include "dcatkit/syntax/turtle.hpp"
#include "dcatkit/validate/validator.hpp"

namespace py = pybind11;
using namespace dcatkit;

namespace {

syntax::RdfFormat format_or_throw(const std::string& name) {
  if (auto f = syntax::format_from_name(name)) return *f;
  throw py::value_error("unknown RDF format: " + name);
}

rdf::Graph parse(const std::string& text, const std::string& format, std::optional<std::string> base) {
  auto result = syntax::parse(text, format_or_throw(format), base ? std::optional<std::string_view>(*base) : std::nullopt);
  if (!result.ok()) {
    std::string message;
    for (const auto& d : result.diagnostics.errors) message += (message.empty() ? "" : "\n") + d.to_string();
    throw py::value_error(message);
  }
  return std::move(result.graph);
}

std::string serialize(const rdf::Graph& g, const std::string& format) {
  switch (format_or_throw(format)) {
    case syntax::RdfFormat::turtle: return syntax::serialize_turtle(g);
    case syntax::RdfFormat::ntriples: return syntax::serialize_ntriples(g);
    case syntax::RdfFormat::jsonld: return syntax::emit_jsonld(g);
  }
  return {};
}

py::object term_or_none(const std::optional<rdf::Term>& t) {
  return t ? py::object(py::str(t->to_string())) : py::object(py::none());
}

py::list validate_graph(const rdf::Graph& g, std::optional<std::set<std::string>> rules, const std::string& min_severity) {
  validate::ValidationOptions options;
  options.rules = std::move(rules);
  auto floor = validate::severity_from_string(min_severity);
  if (!floor) throw py::value_error("unknown severity: " + min_severity);
  options.min_severity = *floor;
  py::list out;
  for (const auto& f : validate::validate(dcat::infer_closure(g), options).findings) {
    py::dict d;
    d["rule"] = f.rule;
    d["severity"] = std::string(validate::to_string(f.severity));
    d["focus"] = f.focus.to_string();
    d["path"] = term_or_none(f.path);
    d["message"] = f.message;
    out.append(d);
  }
  return out;
}

py::tuple to_schema_org(const rdf::Graph& g, const std::string& root) {
  auto result = crosswalk::to_schema_org(dcat::infer_closure(g), rdf::make_iri(root));
  py::list losses;
  for (const auto& loss : result.losses) {
    losses.append(py::make_tuple(loss.triple.subject.to_string(), loss.triple.predicate.to_string(),
                                 loss.triple.object.to_string(), loss.reason));
  }
  return py::make_tuple(std::move(result.graph), losses);
}

py::dict cite(const rdf::Graph& g, const std::string& dataset) {
  const auto rec = crosswalk::to_citation(dcat::infer_closure(g), rdf::make_iri(dataset));
  py::dict d;
  d["identifier"] = rec.identifier;
  d["identifier_scheme"] = rec.identifier_scheme;
  d["creators"] = rec.creators;
  d["title"] = rec.title;
  d["publisher"] = rec.publisher;
  d["publication_year"] = rec.publication_year;
  d["resource_type"] = rec.resource_type;
  d["missing"] = rec.missing;
  d["complete"] = rec.complete();
  d["text"] = crosswalk::format_citation(rec);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "DcatkitError", PyExc_ValueError);

  py::class_<rdf::Graph>(m, "Graph")
      .def(py::init<>())
      .def("__len__", &rdf::Graph::size)
      .def("__eq__", [](const rdf::Graph& a, const rdf::Graph& b) { return a == b; })
      .def("triples", [](const rdf::Graph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& t : g) out.emplace_back(t.subject.to_string(), t.predicate.to_string(), t.object.to_string());
        return out;
      });

  m.def("parse", &parse, py::arg("text"), py::arg("format") = "turtle", py::arg("base") = py::none());
  m.def("serialize", &serialize, py::arg("graph"), py::arg("format") = "turtle");
  m.def("infer_closure", [](const rdf::Graph& g) { return dcat::infer_closure(g); }, py::arg("graph"));
  m.def("validate", &validate_graph, py::arg("graph"), py::arg("rules") = py::none(), py::arg("min_severity") = "info");
  m.def("to_schema_org", &to_schema_org, py::arg("graph"), py::arg("root"));
  m.def("cite", &cite, py::arg("graph"), py::arg("dataset"));
  m.def("list_rules", [] {
    py::list out;
    for (const auto& r : validate::list_rules()) {
      py::dict d;
      d["id"] = r.id;
      d["severity"] = std::string(validate::to_string(r.severity));
      d["requirement"] = r.requirement;
      d["description"] = r.description;
      out.append(d);
    }
    return out;
  });
}
