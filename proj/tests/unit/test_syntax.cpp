#include <doctest.h>

#include <json.hpp>
#include <random>

#include "dcatkit/error.hpp"
#include "dcatkit/rdf/isomorphism.hpp"
#include "dcatkit/syntax/format.hpp"
#include "dcatkit/syntax/jsonld.hpp"
#include "dcatkit/syntax/ntriples.hpp"
#include "dcatkit/syntax/turtle.hpp"
#include "fixtures.hpp"

using namespace dcatkit;
using rdf::Graph;
using rdf::Term;
using testsupport::ex;

namespace {

const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";

Graph ttl(const std::string& text, std::optional<std::string_view> base = std::nullopt) {
  auto r = syntax::parse_turtle(text, base);
  REQUIRE_MESSAGE(r.ok(), (r.diagnostics.errors.empty() ? "" : r.diagnostics.errors.front().to_string()));
  return std::move(r.graph);
}

}  // namespace

TEST_CASE("RFC 3986 reference resolution examples") {
  const std::string base = "http://a/b/c/d;p?q";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"g:h", "g:h"},         {"g", "http://a/b/c/g"},     {"./g", "http://a/b/c/g"},
      {"g/", "http://a/b/c/g/"}, {"/g", "http://a/g"},     {"//g", "http://g"},
      {"?y", "http://a/b/c/d;p?y"}, {"g?y", "http://a/b/c/g?y"}, {"#s", "http://a/b/c/d;p?q#s"},
      {"g#s", "http://a/b/c/g#s"}, {";x", "http://a/b/c/;x"}, {"", "http://a/b/c/d;p?q"},
      {".", "http://a/b/c/"},   {"./", "http://a/b/c/"},    {"..", "http://a/b/"},
      {"../g", "http://a/b/g"}, {"../..", "http://a/"},     {"../../g", "http://a/g"},
      {"../../../g", "http://a/g"}, {"/./g", "http://a/g"}, {"/../g", "http://a/g"},
      {"g.", "http://a/b/c/g."}, {".g", "http://a/b/c/.g"}, {"g..", "http://a/b/c/g.."},
      {"./../g", "http://a/b/g"}, {"./g/.", "http://a/b/c/g/"}, {"g/./h", "http://a/b/c/g/h"},
      {"g/../h", "http://a/b/c/h"}, {"g;x=1/./y", "http://a/b/c/g;x=1/y"}, {"g;x=1/../y", "http://a/b/c/y"},
  };
  for (const auto& [ref, expected] : cases) {
    CAPTURE(ref);
    CHECK(syntax::resolve_iri(base, ref) == expected);
  }
}

TEST_CASE("turtle grammar coverage") {
  const Graph g = ttl(R"(
    @prefix ex: <http://example.org/> .
    PREFIX dct: <http://purl.org/dc/terms/>
    @base <http://example.org/base/> .
    ex:a a ex:Thing ;
      dct:title "Title"@en, """long
title""" ;
      ex:n 42, -1.5, 1e3, true ;
      ex:rel <rel>, [ ex:p "nested" ], ( 1 2 ) ;
      ex:esc ex:with\.dot .
    _:x ex:p 'single' .
  )");
  CHECK(g.contains(ex("a"), Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"), ex("Thing")));
  CHECK(g.contains(ex("a"), Term::iri("http://purl.org/dc/terms/title"), Term::lang_literal("Title", "en")));
  CHECK(g.contains(ex("a"), Term::iri("http://purl.org/dc/terms/title"), Term::literal("long\ntitle")));
  CHECK(g.contains(ex("a"), ex("n"), Term::literal("42", kXsd + "integer")));
  CHECK(g.contains(ex("a"), ex("n"), Term::literal("-1.5", kXsd + "decimal")));
  CHECK(g.contains(ex("a"), ex("n"), Term::literal("1e3", kXsd + "double")));
  CHECK(g.contains(ex("a"), ex("n"), Term::literal("true", kXsd + "boolean")));
  CHECK(g.contains(ex("a"), ex("rel"), Term::iri("http://example.org/base/rel")));
  CHECK(g.contains(ex("a"), ex("esc"), ex("with.dot")));
  CHECK(g.size() == 17);
}

TEST_CASE("turtle errors carry positions and keep completed statements") {
  auto r = syntax::parse_turtle("@prefix ex: <http://example.org/> .\nex:a ex:p ex:b .\nex:c ex:p \"open .\n");
  CHECK_FALSE(r.ok());
  REQUIRE(r.diagnostics.errors.size() == 1);
  CHECK(r.diagnostics.errors[0].line == 3);
  CHECK(r.graph.size() == 1);

  auto undefined = syntax::parse_turtle("nope:a <http://example.org/p> 1 .");
  CHECK_FALSE(undefined.ok());

  auto relative = syntax::parse_turtle("<a> <http://example.org/p> 1 .");
  REQUIRE_FALSE(relative.ok());
  CHECK(relative.diagnostics.errors[0].code == ErrorCode::BaseRequired);

  auto clash = syntax::parse_turtle("\"x\"@en^^<http://example.org/dt> <http://example.org/p> 1 .");
  CHECK_FALSE(clash.ok());
}

TEST_CASE("re-declared prefix is a warning, not an error") {
  auto r = syntax::parse_turtle(
      "@prefix ex: <http://example.org/> .\n@prefix ex: <http://example.com/> .\nex:a ex:p 1 .");
  CHECK(r.ok());
  CHECK(r.diagnostics.warnings.size() == 1);
  CHECK(r.graph.contains(Term::iri("http://example.com/a"), Term::iri("http://example.com/p"),
                         Term::literal("1", kXsd + "integer")));
}

TEST_CASE("N-Triples parser is strict") {
  CHECK(syntax::parse_ntriples("<http://a/s> <http://a/p> \"o\" .\n").ok());
  CHECK(syntax::parse_ntriples("# comment only\n\n").ok());
  CHECK_FALSE(syntax::parse_ntriples("<s> <http://a/p> \"o\" .\n").ok());
  CHECK_FALSE(syntax::parse_ntriples("<http://a/s> <http://a/p> \"o\"\n").ok());
  CHECK_FALSE(syntax::parse_ntriples("<http://a/s> <http://a/p> 'o' .\n").ok());
  CHECK_FALSE(syntax::parse_ntriples("<http://a/s> <http://a/p> \"o\" . junk\n").ok());
  auto r = syntax::parse_ntriples("<http://a/s> <http://a/p> \"o\" .\n<http://a/s> <http://a/p> bad .\n");
  REQUIRE(r.diagnostics.errors.size() == 1);
  CHECK(r.diagnostics.errors[0].line == 2);
  CHECK(r.graph.size() == 1);
}

TEST_CASE("turtle round trip and byte stability on generated graphs") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 100; ++round) {
    const Graph g = testsupport::random_graph(rng, 25);
    const std::string text = syntax::serialize_turtle(g);
    CAPTURE(text);
    auto back = syntax::parse_turtle(text);
    REQUIRE(back.ok());
    CHECK(rdf::isomorphic(back.graph, g));
    CHECK(syntax::serialize_turtle(g) == text);
  }
}

TEST_CASE("N-Triples output parses identically with both parsers") {
  std::mt19937 rng(99);
  for (int round = 0; round < 60; ++round) {
    const Graph g = testsupport::random_graph(rng, 25);
    const std::string nt = syntax::serialize_ntriples(g);
    auto a = syntax::parse_ntriples(nt);
    auto b = syntax::parse_turtle(nt);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.graph == b.graph);
    CHECK(rdf::isomorphic(a.graph, g));
  }
}

TEST_CASE("generated-style blank labels are relabelled the same way by both parsers") {
  const std::string doc = "_:anon1 <http://a/p> _:keep .\n_:anon7 <http://a/p> _:anon1 .\n";
  auto a = syntax::parse_ntriples(doc);
  auto b = syntax::parse_turtle(doc + "[] <http://a/q> 1 .\n");
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  for (const auto& t : a.graph) CHECK(b.graph.contains(t));
  CHECK(a.graph.blank_nodes().size() == 3);
  CHECK(b.graph.blank_nodes().size() == 4);
}

TEST_CASE("format dispatch") {
  CHECK(syntax::format_from_extension("x/catalog.ttl") == syntax::RdfFormat::turtle);
  CHECK(syntax::format_from_extension("a.nt") == syntax::RdfFormat::ntriples);
  CHECK(syntax::format_from_extension("a.jsonld") == syntax::RdfFormat::jsonld);
  CHECK_FALSE(syntax::format_from_extension("a.rdf"));
  CHECK(syntax::format_from_media_type("text/turtle; charset=utf-8") == syntax::RdfFormat::turtle);
  CHECK(syntax::format_from_media_type("application/n-triples") == syntax::RdfFormat::ntriples);
  CHECK_FALSE(syntax::format_from_media_type("text/html"));
  CHECK(syntax::format_from_name("nt") == syntax::RdfFormat::ntriples);
  CHECK_FALSE(syntax::parse("{}", syntax::RdfFormat::jsonld).ok());
}

TEST_CASE("JSON-LD emitter uses the fixed context") {
  const std::string sdo = "http://schema.org/";
  Graph g;
  g.insert(ex("d"), Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"), Term::iri(sdo + "Dataset"));
  g.insert(ex("d"), Term::iri(sdo + "name"), Term::lang_literal("Air", "en"));
  g.insert(ex("d"), Term::iri(sdo + "keywords"), Term::literal("a"));
  g.insert(ex("d"), Term::iri(sdo + "keywords"), Term::literal("b"));
  g.insert(ex("d"), Term::iri(sdo + "distribution"), Term::blank("x"));
  const auto doc = nlohmann::json::parse(syntax::emit_jsonld(g));
  CHECK(doc["@context"] == "https://schema.org/");
  REQUIRE(doc["@graph"].size() == 1);
  const auto& node = doc["@graph"][0];
  CHECK(node["@type"] == "Dataset");
  CHECK(node["name"]["@language"] == "en");
  CHECK(node["keywords"].size() == 2);
  CHECK(node["distribution"]["@id"] == "_:x");

  Graph foreign;
  foreign.insert(ex("d"), ex("p"), Term::literal("x"));
  try {
    syntax::emit_jsonld(foreign);
    FAIL("expected UnmappedTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnmappedTerm);
  }
}
