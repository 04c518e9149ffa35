#include <doctest.h>

#include <set>

#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/error.hpp"
#include "fixtures.hpp"

using namespace dcatkit;
using rdf::Graph;
using rdf::Term;
using testsupport::ex;
namespace t = dcatkit::terms;

namespace {

const Graph& closed_reference() {
  static const Graph g = dcat::infer_closure(testsupport::reference_catalog());
  return g;
}

}  // namespace

TEST_CASE("view precedence follows the most specific type") {
  const Graph& g = closed_reference();
  CHECK(std::holds_alternative<dcat::CatalogView>(dcat::view_resource(g, ex("catalog"))));
  CHECK(std::holds_alternative<dcat::DatasetView>(dcat::view_resource(g, ex("ds1"))));
  CHECK(std::holds_alternative<dcat::DataServiceView>(dcat::view_resource(g, ex("svc"))));
  try {
    dcat::view_resource(g, ex("agency"));
    FAIL("agent accepted as cataloged resource");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACatalogedResource);
  }
  Graph both = testsupport::reference_catalog();
  both.insert(ex("svc"), t::rdf_::type, t::dcat::Dataset);
  CHECK(std::holds_alternative<dcat::DataServiceView>(dcat::view_resource(dcat::infer_closure(both), ex("svc"))));
}

TEST_CASE("catalog view collects members") {
  const auto view = std::get<dcat::CatalogView>(dcat::view_resource(closed_reference(), ex("catalog")));
  CHECK(view.datasets == std::vector<Term>{ex("ds1"), ex("ds2")});
  CHECK(view.services == std::vector<Term>{ex("svc")});
  CHECK(view.records == std::vector<Term>{ex("rec1")});
  CHECK(view.parts.size() == 3);
  CHECK(view.has_type(t::dcat::Resource));
}

TEST_CASE("dataset view parses typed values") {
  const auto view = std::get<dcat::DatasetView>(dcat::view_resource(closed_reference(), ex("ds1")));
  REQUIRE(view.temporal.size() == 1);
  REQUIRE(view.temporal[0].value);
  CHECK(view.temporal[0].value->start->value.lexical() == "2020-01-01");
  REQUIRE(view.temporal_resolution.size() == 1);
  CHECK(view.temporal_resolution[0].value->hours == 1u);
  REQUIRE(view.spatial_resolution_m.size() == 1);
  CHECK(*view.spatial_resolution_m[0].value == doctest::Approx(30.0));
  REQUIRE(view.spatial.size() == 1);
  CHECK(view.spatial[0].centroid_within_bbox());
  CHECK(view.qualified_relations.size() == 1);
  CHECK(view.qualified_attributions.size() == 1);
  REQUIRE(view.quality.size() == 1);
  CHECK(view.quality[0].metric == ex("completeness"));
  CHECK(view.distributions == std::vector<Term>{ex("dist1")});
  // Qualified targets stay on the relationship; dcat:distribution reaches relations through closure.
  CHECK(view.qualified_relations[0].targets == std::vector<Term>{ex("ds2")});
  CHECK(std::find(view.relations.begin(), view.relations.end(), ex("ds2")) == view.relations.end());
  CHECK(std::find(view.relations.begin(), view.relations.end(), ex("dist1")) != view.relations.end());
}

TEST_CASE("views are total: every statement is modeled or kept") {
  Graph g = testsupport::reference_catalog();
  g.insert(ex("ds1"), Term::iri("http://example.org/ext#note"), Term::literal("kept"));
  g.insert(ex("dist1"), Term::iri("http://example.org/ext#note"), Term::literal("kept"));
  const Graph closed = dcat::infer_closure(g);
  const auto view = std::get<dcat::DatasetView>(dcat::view_resource(closed, ex("ds1")));
  CHECK(view.unmodeled.size() == 1);
  CHECK(view.unmodeled[0].predicate.value() == "http://example.org/ext#note");
  const auto dist = dcat::view_distribution(closed, ex("dist1"));
  CHECK(dist.unmodeled.size() == 1);
  CHECK(dist.media_types.size() == 1);
  REQUIRE(dist.byte_sizes.size() == 1);
  CHECK(dist.byte_sizes[0].value == 52311u);
}

TEST_CASE("record view keeps registration dates apart") {
  const auto rec = dcat::view_record(closed_reference(), ex("rec1"));
  CHECK(rec.primary_topics == std::vector<Term>{ex("ds1")});
  CHECK(rec.issued.front().lexical() == "2019-05-02");
  CHECK(rec.unmodeled.empty());
}

TEST_CASE("node helpers") {
  const Graph& g = closed_reference();
  CHECK(dcat::instances_of(g, t::dcat::Dataset).size() == 3);
  CHECK(dcat::distribution_nodes(g).size() == 2);
  CHECK(dcat::record_nodes(g).size() == 1);
  CHECK(dcat::cataloged_resources(g).size() == 4);
  CHECK(dcat::parse_decimal_literal(Term::literal("-0.5", "http://www.w3.org/2001/XMLSchema#decimal")) == -0.5);
  CHECK_FALSE(dcat::parse_decimal_literal(Term::literal("abc", "http://www.w3.org/2001/XMLSchema#decimal")));
}

TEST_CASE("field registry names known predicates") {
  const auto& ax = dcat::load_vocabulary();
  for (const auto& f : dcat::view_field_requirements()) {
    CAPTURE(f.predicate);
    CHECK(std::string(f.requirement).size() > 1);
    CHECK(std::string(f.predicate).find(':') != std::string::npos);
  }
  CHECK_FALSE(ax.properties().empty());
}
