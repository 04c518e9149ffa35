#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "dcatkit/crosswalk/citation.hpp"
#include "dcatkit/crosswalk/mapping.hpp"
#include "dcatkit/crosswalk/schema_org.hpp"
#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/syntax/jsonld.hpp"
#include "dcatkit/validate/validator.hpp"
#include "fixtures.hpp"

using namespace dcatkit;
using rdf::Graph;
using rdf::Term;
using testsupport::ex;
namespace t = dcatkit::terms;

namespace {

const std::string kSdo = "http://schema.org/";

}  // namespace

TEST_CASE("mapping table loads and validates rows") {
  const auto& table = crosswalk::load_mapping_table();
  REQUIRE(table.find_class(t::dcat::Dataset.value()));
  CHECK(table.find_class(t::dcat::Dataset.value())->target == kSdo + "Dataset");
  CHECK(table.find_property(t::dcat::mediaType.value())->conversion == crosswalk::Conversion::media_type);
  CHECK_FALSE(table.unmapped_reason(t::dcat::DataService.value()).empty());
  for (const auto& [iri, entry] : table.properties()) CHECK(entry.target.rfind(kSdo, 0) == 0);

  const std::string header = "prefix\tdcat\thttp://www.w3.org/ns/dcat#\nprefix\tsdo\thttp://schema.org/\n";
  CHECK_NOTHROW(crosswalk::parse_mapping_table(header + "class\tdcat:Dataset\tsdo:Dataset\tcopy\teditorial\t\n"));
  CHECK_THROWS_AS(crosswalk::parse_mapping_table(header + "class\tdcat:Dataset\tsdo:Dataset\n"), Error);
  CHECK_THROWS_AS(crosswalk::parse_mapping_table(header + "class\tfoo:X\tsdo:X\tcopy\teditorial\t\n"), Error);
  CHECK_THROWS_AS(crosswalk::parse_mapping_table(header + "property\tdcat:keyword\tsdo:keywords\tcopy\teditorial\t\n"
                                                          "property\tdcat:keyword\tsdo:about\tcopy\teditorial\t\n"),
                  Error);
  CHECK_THROWS_AS(crosswalk::parse_mapping_table(header + "property\tdcat:keyword\tsdo:keywords\tsplice\teditorial\t\n"),
                  Error);
}

TEST_CASE("crosswalk output matches the mapping histogram") {
  const Graph asserted = testsupport::reference_catalog();
  const Graph closed = dcat::infer_closure(asserted);
  for (const char* root : {"catalog", "ds1", "ds2", "dist1"}) {
    CAPTURE(root);
    const auto result = crosswalk::to_schema_org(closed, ex(root));
    CHECK(testsupport::output_histogram(result.graph) == testsupport::crosswalk_oracle_histogram(asserted, ex(root)));
  }
}

TEST_CASE("download URL becomes a DataDownload content URL") {
  const auto result = crosswalk::to_schema_org(dcat::infer_closure(testsupport::reference_catalog()), ex("ds1"));
  const Term sdo_distribution = Term::iri(kSdo + "distribution");
  const auto dists = result.graph.objects(ex("ds1"), sdo_distribution);
  REQUIRE(dists.size() == 1);
  CHECK(result.graph.has_type(dists[0], Term::iri(kSdo + "DataDownload")));
  CHECK(result.graph.objects(dists[0], Term::iri(kSdo + "contentUrl")) ==
        std::vector<Term>{Term::iri("https://example.org/files/air.csv.zip")});
  CHECK(result.graph.contains(dists[0], Term::iri(kSdo + "encodingFormat"), Term::literal("text/csv")));
  CHECK(result.graph.contains(ex("ds1"), Term::iri(kSdo + "temporalCoverage"), Term::literal("2020-01-01/2020-12-31")));
  CHECK_FALSE(result.graph.has_type(ex("ds1"), Term::iri(kSdo + "DataCatalog")));
}

TEST_CASE("crosswalk records losses and never emits foreign terms") {
  const Graph closed = dcat::infer_closure(testsupport::reference_catalog());
  const auto result = crosswalk::to_schema_org(closed, ex("catalog"));
  bool policy_lost = false;
  for (const auto& loss : result.losses) {
    CHECK_FALSE(loss.reason.empty());
    policy_lost |= loss.triple.predicate == t::odrl::hasPolicy;
  }
  CHECK(policy_lost);
  CHECK(result.graph.contains(ex("ds2"), Term::iri(kSdo + "temporalCoverage"), Term::literal("2021-01-01/..")));
  CHECK_NOTHROW(syntax::emit_jsonld(result.graph));
  const auto doc = nlohmann::json::parse(syntax::emit_jsonld(result.graph));
  bool has_dataset = false;
  for (const auto& node : doc["@graph"]) has_dataset |= node.value("@type", "") == "Dataset";
  CHECK(has_dataset);
}

TEST_CASE("crosswalk roots must be datasets or distributions") {
  const Graph closed = dcat::infer_closure(testsupport::reference_catalog());
  for (const char* root : {"svc", "agency", "rec1"}) {
    try {
      crosswalk::to_schema_org(closed, ex(root));
      FAIL("exported " << root);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RootNotExportable);
    }
  }
}

TEST_CASE("citation from the reference catalog") {
  const Graph closed = dcat::infer_closure(testsupport::reference_catalog());
  const auto rec = crosswalk::to_citation(closed, ex("ds2"));
  CHECK(rec.complete());
  CHECK(rec.identifier == "https://doi.org/10.5555/stations");
  CHECK(rec.identifier_scheme == "DOI");
  CHECK(rec.creators == std::vector<std::string>{"Alice Example"});
  CHECK(rec.publisher == "Example Environment Agency");
  CHECK(rec.publication_year == 2021);
  CHECK(rec.resource_type == "Dataset");
  CHECK(crosswalk::format_citation(rec) ==
        "Alice Example (2021): Monitoring station register. Example Environment Agency. https://doi.org/10.5555/stations");
  const auto json = nlohmann::json::parse(rec.to_json());
  CHECK(json["identifier"] == rec.identifier);
  CHECK_THROWS_AS(crosswalk::to_citation(closed, ex("svc")), Error);
}

TEST_CASE("citation keeps list order of creators and reports gaps") {
  const Graph g = testsupport::parse_turtle_or_die(R"(
    @prefix dcat: <http://www.w3.org/ns/dcat#> .
    @prefix dcterms: <http://purl.org/dc/terms/> .
    @prefix foaf: <http://xmlns.com/foaf/0.1/> .
    @prefix ex: <http://example.org/> .
    ex:d a dcat:Dataset ; dcterms:creator ( ex:zoe ex:adam ) .
    ex:zoe foaf:name "Zoe" .
    ex:adam foaf:name "Adam" .
  )");
  const auto rec = crosswalk::to_citation(dcat::infer_closure(g), ex("d"));
  CHECK(rec.creators == std::vector<std::string>{"Zoe", "Adam"});
  CHECK(rec.missing == std::vector<std::string>{"identifier", "title", "publisher", "publication_year", "resource_type"});
  CHECK(crosswalk::format_citation(rec) == "Zoe; Adam ([year unknown]): [title unknown]. [publisher unknown]. [identifier unknown]");
}

TEST_CASE("citation completeness agrees with the citation rule") {
  std::mt19937 rng(77);
  validate::ValidationOptions only_cit;
  only_cit.rules = std::set<std::string>{"DC2-CIT-01"};
  int complete = 0;
  for (const Graph& doc : testsupport::citation_corpus(rng, 50)) {
    const Graph closed = dcat::infer_closure(doc);
    const Term d = dcat::instances_of(closed, t::dcat::Dataset).front();
    const bool cites = crosswalk::to_citation(closed, d).complete();
    CHECK(cites == validate::validate(closed, only_cit).findings.empty());
    complete += cites;
  }
  CHECK(complete > 0);
  CHECK(complete < 50);
}
