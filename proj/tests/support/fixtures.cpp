#include "fixtures.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <httplib.h>

#include "dcatkit/crosswalk/mapping.hpp"
#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/rdf/namespaces.hpp"
#include "dcatkit/syntax/ntriples.hpp"
#include "dcatkit/syntax/turtle.hpp"

namespace testsupport {

namespace t = dcatkit::terms;
namespace ns = dcatkit::ns;
using dcatkit::rdf::Triple;

std::string data_path(const std::string& name) { return std::string(DCATKIT_TEST_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

Graph parse_turtle_or_die(const std::string& text, const std::string& base) {
  auto r = dcatkit::syntax::parse_turtle(text, base);
  if (!r.ok()) throw std::runtime_error("fixture does not parse: " + r.diagnostics.errors.front().to_string());
  return std::move(r.graph);
}

Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }

std::string reference_catalog_text() { return read_file(data_path("reference_catalog.ttl")); }

Graph reference_catalog() {
  static const Graph g = parse_turtle_or_die(reference_catalog_text());
  return g;
}

void drop(Graph& g, const Term& s, const Term& p) {
  for (const Triple& tr : g.match(s, p, std::nullopt)) g.erase(tr);
}

void set(Graph& g, const Term& s, const Term& p, const Term& o) {
  drop(g, s, p);
  g.insert(s, p, o);
}

namespace {

Term lit(const std::string& lex, std::string_view dt = {}) { return Term::literal(lex, dt); }
Term xsd(const char* local) { return Term::iri(std::string(ns::xsd) + local); }
std::string xsd_dt(const char* local) { return std::string(ns::xsd) + local; }
Term iana(const std::string& type) { return Term::iri("https://www.iana.org/assignments/media-types/" + type); }

}  // namespace

const std::vector<SeededFault>& seeded_faults() {
  static const std::vector<SeededFault> faults = {
      {"license written as a literal IRI", "DC2-LIC-01",
       [](Graph& g) { set(g, ex("ds1"), t::dcterms::license, lit("https://creativecommons.org/licenses/by/4.0/")); }},
      {"access-rights code used as license", "DC2-LIC-02",
       [](Graph& g) {
         set(g, ex("ds2"), t::dcterms::license,
             Term::iri("http://publications.europa.eu/resource/authority/access-right/PUBLIC"));
       }},
      {"free-text license", "DC2-LIC-03",
       [](Graph& g) { set(g, ex("ds2"), t::dcterms::license, lit("Free to reuse with attribution", {})); }},
      {"policy without license or rights", "DC2-LIC-04",
       [](Graph& g) {
         drop(g, ex("ds1"), t::dcterms::license);
         drop(g, ex("ds1"), t::dcterms::accessRights);
       }},
      {"IANA media type in dcterms:format", "DC2-FMT-01",
       [](Graph& g) { set(g, ex("dist1"), t::dcterms::format, iana("text/csv")); }},
      {"unregistered package format", "DC2-FMT-02",
       [](Graph& g) { set(g, ex("dist1"), t::dcat::packageFormat, iana("application/x-tar")); }},
      {"distribution without URLs", "DC2-DST-01",
       [](Graph& g) {
         drop(g, ex("dist1"), t::dcat::downloadURL);
         drop(g, ex("dist1"), t::dcat::accessURL);
       }},
      {"service without endpoint", "DC2-SVC-01", [](Graph& g) { drop(g, ex("svc"), t::dcat::endpointURL); }},
      {"literal endpoint URL", "DC2-SVC-01",
       [](Graph& g) { set(g, ex("svc"), t::dcat::endpointURL, lit("https://example.org/api")); }},
      {"endpoint description without conformsTo", "DC2-SVC-02",
       [](Graph& g) { drop(g, ex("svc"), t::dcterms::conformsTo); }},
      {"service serving a non-dataset", "DC2-SRV-DS-01",
       [](Graph& g) { g.insert(ex("svc"), t::dcat::servesDataset, ex("agency")); }},
      {"period start after end", "DC2-TMP-01",
       [](Graph& g) { set(g, ex("period1"), t::dcat::startDate, lit("2021-02-01", xsd_dt("date"))); }},
      {"period without bounds", "DC2-TMP-01",
       [](Graph& g) {
         drop(g, ex("period1"), t::dcat::startDate);
         drop(g, ex("period1"), t::dcat::endDate);
       }},
      {"temporal coverage as a literal", "DC2-TMP-01",
       [](Graph& g) { set(g, ex("ds1"), t::dcterms::temporal, lit("2020")); }},
      {"malformed duration", "DC2-TMP-02",
       [](Graph& g) { set(g, ex("ds1"), t::dcat::temporalResolution, lit("P1H", xsd_dt("duration"))); }},
      {"disagreeing start bounds", "DC2-TMP-03",
       [](Graph& g) { set(g, ex("instant2"), t::time::inXSDDate, lit("2021-03-01", xsd_dt("date"))); }},
      {"negative spatial resolution", "DC2-SPA-01",
       [](Graph& g) { set(g, ex("ds1"), t::dcat::spatialResolutionInMeters, lit("-5", xsd_dt("decimal"))); }},
      {"centroid outside bbox", "DC2-SPA-02",
       [](Graph& g) {
         set(g, ex("loc1"), t::dcat::centroid,
             lit("POINT(9 51)", "http://www.opengis.net/ont/geosparql#wktLiteral"));
       }},
      {"unparseable bbox", "DC2-SPA-02",
       [](Graph& g) {
         set(g, ex("loc1"), t::dcat::bbox,
             lit("POLYGON((4 50, 6 52))", "http://www.opengis.net/ont/geosparql#wktLiteral"));
       }},
      {"untyped cataloged resource", "DC2-TYP-01",
       [](Graph& g) { g.insert(ex("catalog"), t::dcterms::hasPart, ex("leaflet")); }},
      {"service also typed as dataset", "DC2-TYP-02",
       [](Graph& g) { g.insert(ex("svc"), t::rdf_::type, t::dcat::Dataset); }},
      {"dataset without creator", "DC2-CIT-01", [](Graph& g) { drop(g, ex("ds2"), t::dcterms::creator); }},
      {"dataset without issued year", "DC2-CIT-01",
       [](Graph& g) { set(g, ex("ds2"), t::dcterms::issued, lit("unknown")); }},
      {"non-HTTP identifier", "DC2-ID-01",
       [](Graph& g) { set(g, ex("ds2"), t::dcterms::identifier, lit("stations-2021")); }},
      {"alternate identifier without notation", "DC2-ID-02",
       [](Graph& g) { drop(g, ex("altid1"), t::skos::notation); }},
      {"notation without type or agency", "DC2-ID-03",
       [](Graph& g) {
         set(g, ex("altid1"), t::skos::notation, lit("10.5555/air-quality"));
         drop(g, ex("altid1"), t::adms::schemaAgency);
       }},
      {"record of a foreign resource", "DC2-CAT-01",
       [](Graph& g) { set(g, ex("rec1"), t::foaf::primaryTopic, ex("elsewhere")); }},
      {"literal theme taxonomy", "DC2-CAT-02",
       [](Graph& g) { set(g, ex("catalog"), t::dcat::themeTaxonomy, lit("EU data themes")); }},
      {"measurement without metric", "DC2-QUA-01", [](Graph& g) { drop(g, ex("qm1"), t::dqv::isMeasurementOf); }},
      {"relationship without role", "DC2-REL-01", [](Graph& g) { drop(g, ex("rel1"), t::dcat::hadRole); }},
      {"attribution without agent", "DC2-REL-01", [](Graph& g) { drop(g, ex("attr1"), t::prov::agent); }},
  };
  return faults;
}

// ---------------------------------------------------------------------------
// Vocabulary read straight from the data file, independent of the library's
// axiom tables.

namespace {

struct RawVocabulary {
  std::vector<std::string> classes;
  std::vector<std::string> properties;
  std::set<std::pair<std::string, std::string>> subclass;     // direct (child, parent)
  std::set<std::pair<std::string, std::string>> subproperty;  // direct (child, parent)
};

const RawVocabulary& raw_vocabulary() {
  static const RawVocabulary v = [] {
    RawVocabulary out;
    auto parsed = dcatkit::syntax::parse_ntriples(read_file(std::string(DCATKIT_DATA_DIR) + "/vocabulary.nt"));
    if (!parsed.ok()) throw std::runtime_error("vocabulary.nt does not parse");
    const std::string rdfs(ns::rdfs);
    for (const Triple& tr : parsed.graph) {
      if (tr.predicate == t::rdf_::type && tr.object.value() == rdfs + "Class") out.classes.push_back(tr.subject.value());
      if (tr.predicate == t::rdf_::type && tr.object == t::rdf_::Property) out.properties.push_back(tr.subject.value());
      if (tr.predicate.value() == rdfs + "subClassOf") out.subclass.emplace(tr.subject.value(), tr.object.value());
      if (tr.predicate.value() == rdfs + "subPropertyOf") out.subproperty.emplace(tr.subject.value(), tr.object.value());
    }
    return out;
  }();
  return v;
}

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Graph brute_force_closure(const Graph& g) {
  const RawVocabulary& v = raw_vocabulary();
  Graph out = g;
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Triple> snapshot(out.begin(), out.end());
    for (const Triple& tr : snapshot) {
      for (const auto& [child, parent] : v.subproperty) {
        if (tr.predicate.value() == child) changed |= out.insert(tr.subject, Term::iri(parent), tr.object);
      }
      if (tr.predicate == t::rdf_::type && tr.object.is_iri()) {
        for (const auto& [child, parent] : v.subclass) {
          if (tr.object.value() == child) changed |= out.insert(tr.subject, t::rdf_::type, Term::iri(parent));
        }
      }
    }
  }
  return out;
}

Graph random_dcat_graph(std::mt19937& rng, std::size_t max_triples) {
  const RawVocabulary& v = raw_vocabulary();
  std::vector<Term> nodes;
  for (int i = 0; i < 8; ++i) nodes.push_back(ex("n" + std::to_string(i)));
  for (int i = 0; i < 3; ++i) nodes.push_back(Term::blank("b" + std::to_string(i)));
  Graph g;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_triples)(rng);
  while (g.size() < n) {
    const Term& s = pick(rng, nodes);
    if (coin(rng, 0.35)) {
      g.insert(s, t::rdf_::type, Term::iri(pick(rng, v.classes)));
    } else {
      const Term o = coin(rng, 0.8) ? pick(rng, nodes) : Term::literal("v" + std::to_string(rng() % 5));
      g.insert(s, Term::iri(pick(rng, v.properties)), o);
    }
  }
  return g;
}

Graph random_graph(std::mt19937& rng, std::size_t max_triples) {
  static const std::vector<std::string> iris = {
      "http://example.org/a",
      "http://example.org/b#frag",
      "http://example.org/path/to/c",
      "http://example.org/caf\xC3\xA9",
      "http://example.org/with-dash_and.dot",
      "http://example.org/trailing.",
      "http://example.org/ns#1starts-with-digit",
      "http://example.org/q?x=1&y=2",
      "http://example.org/paren(1)",
      "http://example.org/tilde~x",
      "http://example.org/",
      "http://www.w3.org/ns/dcat#Dataset",
      "http://www.w3.org/ns/dcat#keyword",
      "http://purl.org/dc/terms/title",
      "urn:uuid:6f1c2d0e-0000-4000-8000-000000000001",
      "mailto:someone@example.org",
  };
  static const std::vector<std::string> texts = {
      "",       "plain",         "with \"quotes\"", "back\\slash",   "line\nbreak", "tab\there",
      "caf\xC3\xA9",   "\xE6\x97\xA5\xE6\x9C\xAC", "emoji \xF0\x9F\x98\x80", "'single'", "ends with quote\"",
      "\"\"\"triple\"\"\"", "carriage\rreturn", "#not a comment", "a@b", "trailing space ",
  };
  static const std::vector<std::pair<std::string, std::string>> typed = {
      {"42", "integer"},     {"-7", "integer"},    {"007", "integer"},  {"+3", "integer"},
      {"1.50", "decimal"},   {"-.5", "decimal"},   {"3.", "decimal"},   {"1e3", "double"},
      {"-2.5E-3", "double"}, {"true", "boolean"},  {"false", "boolean"}, {"TRUE", "boolean"},
      {"abc", "integer"},    {"2024-01-31", "date"}, {"P1Y2M", "duration"}, {"", "string"},
  };
  static const std::vector<std::string> langs = {"en", "en-GB", "de", "fr-CA", "zh-Hant-TW"};

  auto iri = [&] { return Term::iri(pick(rng, iris)); };
  auto blank = [&] { return Term::blank("x" + std::to_string(rng() % 6)); };
  auto literal = [&]() -> Term {
    switch (rng() % 4) {
      case 0: return Term::literal(pick(rng, texts));
      case 1: return Term::lang_literal(pick(rng, texts), pick(rng, langs));
      case 2: {
        const auto& [lex, dt] = pick(rng, typed);
        return Term::literal(lex, std::string(ns::xsd) + dt);
      }
      default: return Term::literal(pick(rng, texts), "http://example.org/dt#custom");
    }
  };

  Graph g;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_triples)(rng);
  for (std::size_t attempts = 0; g.size() < n && attempts < 4 * n + 8; ++attempts) {
    const Term s = coin(rng, 0.3) ? blank() : iri();
    const Term p = coin(rng, 0.15) ? t::rdf_::type : iri();
    Term o;
    switch (rng() % 3) {
      case 0: o = iri(); break;
      case 1: o = blank(); break;
      default: o = literal(); break;
    }
    g.insert(s, p, o);
  }
  return g;
}

dcatkit::dcat::Duration random_duration(std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> value(0, 9999);
  dcatkit::dcat::Duration d;
  do {
    d = {};
    d.sign = coin(rng, 0.2) ? -1 : 1;
    if (coin(rng)) d.years = value(rng);
    if (coin(rng)) d.months = value(rng);
    if (coin(rng)) d.days = value(rng);
    if (coin(rng)) d.hours = value(rng);
    if (coin(rng)) d.minutes = value(rng);
    if (coin(rng)) {
      dcatkit::dcat::DecimalSeconds s;
      s.whole = value(rng);
      const int digits = static_cast<int>(rng() % 4);
      for (int i = 0; i < digits; ++i) s.fraction += static_cast<char>('0' + rng() % 10);
      d.seconds = s;
    }
  } while (!d.years && !d.months && !d.days && !d.hours && !d.minutes && !d.seconds);
  return d;
}

std::vector<Graph> citation_corpus(std::mt19937& rng, std::size_t n) {
  std::vector<Graph> docs;
  for (std::size_t i = 0; i < n; ++i) {
    Graph g;
    const Term d = ex("cite/ds" + std::to_string(i));
    g.insert(d, t::rdf_::type, coin(rng, 0.2) ? t::dcat::Catalog : t::dcat::Dataset);
    if (coin(rng, 0.8)) g.insert(d, t::dcterms::title, Term::lang_literal("Dataset " + std::to_string(i), "en"));
    if (coin(rng, 0.8)) {
      const Term who = ex("cite/person" + std::to_string(rng() % 4));
      g.insert(d, t::dcterms::creator, who);
      if (coin(rng, 0.7)) g.insert(who, t::foaf::name, Term::literal("Person " + who.value().substr(30)));
    }
    if (coin(rng, 0.8)) g.insert(d, t::dcterms::publisher, ex("cite/publisher"));
    switch (rng() % 5) {
      case 0: break;
      case 1: g.insert(d, t::dcterms::issued, Term::literal("20" + std::to_string(10 + rng() % 15) + "-01-01", xsd_dt("date"))); break;
      case 2: g.insert(d, t::dcterms::issued, Term::literal("2019", xsd_dt("gYear"))); break;
      case 3: g.insert(d, t::dcterms::issued, Term::literal("circa 2019")); break;
      default: g.insert(d, t::dcterms::issued, ex("cite/some-date")); break;
    }
    switch (rng() % 5) {
      case 0: break;
      case 1: g.insert(d, t::dcterms::identifier, Term::literal("https://doi.org/10.5555/" + std::to_string(i))); break;
      case 2: g.insert(d, t::dcterms::identifier, Term::literal("local-" + std::to_string(i))); break;
      case 3: {
        const Term alt = ex("cite/alt" + std::to_string(i));
        g.insert(d, t::adms::identifier, alt);
        g.insert(alt, t::rdf_::type, t::adms::Identifier);
        if (coin(rng)) g.insert(alt, t::skos::notation, Term::literal("X-" + std::to_string(i), "http://example.org/idtype/ARK"));
        break;
      }
      default: g.insert(d, t::dcterms::identifier, ex("cite/id" + std::to_string(i))); break;
    }
    if (coin(rng, 0.75)) g.insert(d, t::dcterms::type, Term::iri("http://purl.org/dc/dcmitype/Dataset"));
    docs.push_back(std::move(g));
  }
  return docs;
}

void inject_foreign_triples(Graph& g, std::mt19937& rng, std::size_t n) {
  std::vector<Term> nodes = g.subject_terms();
  const std::vector<std::string> predicates = {"http://example.org/ext#note", "http://example.org/ext#rank",
                                               "http://example.org/ext#seeAlso", "http://schema.org/keywords",
                                               "http://www.w3.org/2000/01/rdf-schema#seeAlso"};
  const std::vector<std::string> classes = {"http://example.org/ext#Thing", "http://schema.org/CreativeWork",
                                            "http://xmlns.com/foaf/0.1/Document"};
  for (std::size_t added = 0; added < n;) {
    const Term& s = pick(rng, nodes);
    bool fresh;
    if (coin(rng, 0.2)) {
      fresh = g.insert(s, t::rdf_::type, Term::iri(pick(rng, classes)));
    } else {
      Term o = coin(rng) ? Term::literal("extra " + std::to_string(rng() % 1000)) : pick(rng, nodes);
      fresh = g.insert(s, Term::iri(pick(rng, predicates)), o);
    }
    if (fresh) ++added;
  }
}

std::map<std::string, int> crosswalk_oracle_histogram(const Graph& asserted, const Term& root) {
  const auto& table = dcatkit::crosswalk::load_mapping_table();
  std::map<std::string, int> hist;
  std::deque<Term> queue{root};
  std::set<Term> seen{root};
  while (!queue.empty()) {
    const Term node = queue.front();
    queue.pop_front();
    for (const Triple& tr : asserted.match(node, std::nullopt, std::nullopt)) {
      if (tr.predicate == t::rdf_::type) {
        if (const auto* m = table.find_class(tr.object.value())) ++hist["a " + m->target];
        continue;
      }
      const auto* m = table.find_property(tr.predicate.value());
      if (m == nullptr) continue;
      ++hist[m->target];
      const bool iana = tr.object.value().rfind("https://www.iana.org/assignments/media-types/", 0) == 0;
      const bool follows = m->conversion == dcatkit::crosswalk::Conversion::copy ||
                           (m->conversion == dcatkit::crosswalk::Conversion::media_type && !iana);
      if (follows && tr.object.is_resource() && seen.insert(tr.object).second) queue.push_back(tr.object);
    }
  }
  return hist;
}

std::map<std::string, int> output_histogram(const Graph& g) {
  std::map<std::string, int> hist;
  for (const Triple& tr : g) ++hist[tr.predicate == t::rdf_::type ? "a " + tr.object.value() : tr.predicate.value()];
  return hist;
}

Graph resource_subgraph(const Graph& g) {
  std::set<Term> records;
  for (const Triple& tr : g.match(std::nullopt, t::rdf_::type, t::dcat::CatalogRecord)) records.insert(tr.subject);
  Graph out;
  for (const Triple& tr : g) {
    if (records.count(tr.subject) || (tr.predicate == t::dcat::record && records.count(tr.object))) continue;
    out.insert(tr);
  }
  return out;
}

std::string render_duration(const dcatkit::dcat::Duration& d) {
  std::string out = d.sign < 0 ? "-P" : "P";
  if (d.years) out += std::to_string(*d.years) + "Y";
  if (d.months) out += std::to_string(*d.months) + "M";
  if (d.days) out += std::to_string(*d.days) + "D";
  if (d.hours || d.minutes || d.seconds) out += "T";
  if (d.hours) out += std::to_string(*d.hours) + "H";
  if (d.minutes) out += std::to_string(*d.minutes) + "M";
  if (d.seconds) {
    out += std::to_string(d.seconds->whole);
    if (!d.seconds->fraction.empty()) out += "." + d.seconds->fraction;
    out += "S";
  }
  return out;
}

// ---------------------------------------------------------------------------

struct LoopbackServer::Impl {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::mutex rng_mutex;
  std::mt19937 rng;
};

LoopbackServer::LoopbackServer(std::map<std::string, Document> docs, unsigned seed, std::chrono::milliseconds max_delay)
    : impl_(std::make_unique<Impl>()) {
  impl_->rng.seed(seed);
  impl_->server.new_task_queue = [] { return new httplib::ThreadPool(16); };
  for (auto& [path, doc] : docs) {
    impl_->server.Get(path, [this, doc, max_delay](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      const int now = ++in_flight_;
      int seen = max_in_flight_.load();
      while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
      }
      std::chrono::milliseconds delay{0};
      if (max_delay.count() > 0) {
        std::lock_guard<std::mutex> lock(impl_->rng_mutex);
        delay = std::chrono::milliseconds(impl_->rng() % (max_delay.count() + 1));
      }
      std::this_thread::sleep_for(delay + doc.delay);
      if (!doc.location.empty()) {
        res.status = 302;
        res.set_header("Location", doc.location);
      } else if (!doc.etag.empty() && req.get_header_value("If-None-Match") == doc.etag) {
        res.status = 304;
        res.set_header("ETag", doc.etag);
      } else {
        if (!doc.etag.empty()) res.set_header("ETag", doc.etag);
        res.set_content(doc.body, doc.content_type);
      }
      --in_flight_;
    });
  }
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

LoopbackServer::~LoopbackServer() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string LoopbackServer::url(const std::string& path) const {
  return "http://127.0.0.1:" + std::to_string(impl_->port) + path;
}

void LoopbackServer::reset_counters() {
  in_flight_ = 0;
  max_in_flight_ = 0;
  requests_ = 0;
}

}  // namespace testsupport
