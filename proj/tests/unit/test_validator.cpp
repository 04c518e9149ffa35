#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/validate/codelists.hpp"
#include "dcatkit/validate/validator.hpp"
#include "fixtures.hpp"

using namespace dcatkit;
using rdf::Graph;
using rdf::Term;
using testsupport::ex;
namespace t = dcatkit::terms;

namespace {

validate::ValidationReport check(const Graph& g, const validate::ValidationOptions& options = {}) {
  return validate::validate(dcat::infer_closure(g), options);
}

}  // namespace

TEST_CASE("rule catalog") {
  const auto& rules = validate::list_rules();
  CHECK(rules.size() == 25);
  std::set<std::string> ids;
  for (const auto& r : rules) {
    CHECK(r.id.rfind("DC2-", 0) == 0);
    CHECK_FALSE(r.description.empty());
    ids.insert(r.id);
    CHECK(validate::find_rule(r.id) == &r);
  }
  CHECK(ids.size() == rules.size());
  CHECK(std::is_sorted(rules.begin(), rules.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK(validate::find_rule("DC2-NOPE") == nullptr);
}

TEST_CASE("reference catalog has no findings at any severity") {
  const auto report = check(testsupport::reference_catalog());
  CHECK(report.conforms());
  CHECK(report.findings.empty());
  for (const auto& f : report.findings) MESSAGE(f.rule << " " << f.focus.to_string() << " " << f.message);
}

TEST_CASE("each seeded fault yields exactly its rule") {
  std::set<std::string> covered;
  for (const auto& fault : testsupport::seeded_faults()) {
    CAPTURE(fault.name);
    Graph g = testsupport::reference_catalog();
    const Graph before = g;
    fault.apply(g);
    REQUIRE_FALSE(g == before);
    const auto report = check(g);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].rule == fault.rule);
    CHECK(report.findings[0].severity == validate::find_rule(fault.rule)->severity);
    covered.insert(fault.rule);
  }
  CHECK(testsupport::seeded_faults().size() >= 20);
  CHECK(covered.size() == validate::list_rules().size());
}

TEST_CASE("severity floor and rule selection") {
  Graph g = testsupport::reference_catalog();
  testsupport::set(g, ex("ds2"), t::dcterms::identifier, Term::literal("stations-2021"));  // info
  testsupport::drop(g, ex("dist1"), t::dcat::downloadURL);
  testsupport::drop(g, ex("dist1"), t::dcat::accessURL);  // error
  CHECK(check(g).findings.size() == 2);
  validate::ValidationOptions errors_only;
  errors_only.min_severity = validate::Severity::error;
  const auto report = check(g, errors_only);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].rule == "DC2-DST-01");
  CHECK_FALSE(report.conforms());

  validate::ValidationOptions only_id;
  only_id.rules = std::set<std::string>{"DC2-ID-01"};
  CHECK(check(g, only_id).findings.size() == 1);
  CHECK(check(g, only_id).conforms());

  validate::ValidationOptions bogus;
  bogus.rules = std::set<std::string>{"DC2-XYZ"};
  try {
    check(g, bogus);
    FAIL("unknown rule accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownRuleId);
  }
}

TEST_CASE("JSON report is stable and well formed") {
  Graph g = testsupport::reference_catalog();
  testsupport::drop(g, ex("svc"), t::dcat::endpointURL);
  const std::string a = check(g).to_json();
  const std::string b = check(g).to_json();
  CHECK(a == b);
  const auto doc = nlohmann::json::parse(a);
  CHECK(doc["conforms"] == false);
  CHECK(doc["counts"]["error"] == 1);
  REQUIRE(doc["findings"].size() == 1);
  CHECK(doc["findings"][0]["rule"] == "DC2-SVC-01");
  CHECK(doc["findings"][0]["focus"] == "http://example.org/svc");
  CHECK(doc["findings"][0]["path"] == "http://www.w3.org/ns/dcat#endpointURL");
}

TEST_CASE("network identifier checks go through the dereference hook") {
  validate::ValidationOptions options;
  options.network_ids = true;
  std::vector<std::string> asked;
  options.dereference = [&](const std::string& url) {
    asked.push_back(url);
    return url != "https://example.org/id/ds1";
  };
  const auto report = check(testsupport::reference_catalog(), options);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].rule == "DC2-ID-01");
  CHECK(report.findings[0].focus == ex("ds1"));
  CHECK(asked.size() == 4);
}

TEST_CASE("foreign statements never change findings") {
  std::mt19937 rng(42);
  Graph faulty = testsupport::reference_catalog();
  testsupport::seeded_faults()[0].apply(faulty);
  for (const Graph& base : {testsupport::reference_catalog(), faulty}) {
    const auto expected = check(base).findings;
    for (int round = 0; round < 5; ++round) {
      Graph g = base;
      testsupport::inject_foreign_triples(g, rng, 100);
      CHECK(check(g).findings == expected);
    }
  }
}

TEST_CASE("open-ended periods validate cleanly") {
  Graph start_only = testsupport::reference_catalog();
  testsupport::drop(start_only, ex("period1"), t::dcat::endDate);
  CHECK(check(start_only).findings.empty());
  Graph end_only = testsupport::reference_catalog();
  testsupport::drop(end_only, ex("period1"), t::dcat::startDate);
  CHECK(check(end_only).findings.empty());
}

TEST_CASE("media type code list") {
  CHECK(validate::is_registered_media_type(Term::literal("text/csv")));
  CHECK(validate::is_registered_media_type(Term::literal("TEXT/CSV; charset=utf-8")));
  CHECK(validate::is_registered_media_type(Term::iri("http://www.iana.org/assignments/media-types/application/zip")));
  CHECK_FALSE(validate::is_registered_media_type(Term::literal("application/x-tar")));
  CHECK_FALSE(validate::is_registered_media_type(Term::iri("http://publications.europa.eu/resource/authority/file-type/CSV")));
  CHECK(validate::media_type_of(Term::literal("CSV")).empty());
  CHECK_THROWS_AS(validate::parse_code_list("ok\nnot ok\n", [](std::string_view s) { return s == "ok"; }, "test"), Error);
}
