#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dcatkit/dcat/temporal.hpp"
#include "dcatkit/rdf/graph.hpp"

namespace testsupport {

using dcatkit::rdf::Graph;
using dcatkit::rdf::Term;

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);
Graph parse_turtle_or_die(const std::string& text, const std::string& base = "http://example.org/");

Term ex(const std::string& local);

/// The clean reference catalog under tests/data.
Graph reference_catalog();
std::string reference_catalog_text();

struct SeededFault {
  std::string name;
  std::string rule;  // the single rule id expected to fire
  std::function<void(Graph&)> apply;
};

/// Single-fault mutations of the reference catalog.
const std::vector<SeededFault>& seeded_faults();

/// Removes every (s, p, *) triple.
void drop(Graph& g, const Term& s, const Term& p);
/// Replaces every (s, p, *) triple with (s, p, o).
void set(Graph& g, const Term& s, const Term& p, const Term& o);

/// Small graph over DCAT classes and properties, at most `max_triples`.
Graph random_dcat_graph(std::mt19937& rng, std::size_t max_triples);
/// Arbitrary graph stressing the syntax: blank nodes, language tags,
/// datatypes, escapes and non-ASCII text.
Graph random_graph(std::mt19937& rng, std::size_t max_triples);
dcatkit::dcat::Duration random_duration(std::mt19937& rng);

/// Closure by repeated one-step application of the direct axioms read from
/// the vocabulary file, until nothing changes.
Graph brute_force_closure(const Graph& g);

/// Documents with one dataset each, citation elements dropped at random.
std::vector<Graph> citation_corpus(std::mt19937& rng, std::size_t n);

/// Non-DCAT statements attached to existing nodes.
void inject_foreign_triples(Graph& g, std::mt19937& rng, std::size_t n);

/// Expected Schema.org output histogram: one output statement per asserted
/// statement on a reachable node whose predicate or class is mapped. Keys
/// are predicate IRIs, or "a <class IRI>" for types.
std::map<std::string, int> crosswalk_oracle_histogram(const Graph& asserted, const Term& root);
std::map<std::string, int> output_histogram(const Graph& g);

/// The graph minus catalog records and the dcat:record links to them.
Graph resource_subgraph(const Graph& g);

/// Reference rendering of a duration, components in designator order.
std::string render_duration(const dcatkit::dcat::Duration& d);

/// Loopback HTTP server serving fixed documents with random delays and
/// counting concurrent requests.
class LoopbackServer {
 public:
  struct Document {
    std::string content_type;
    std::string body;
    std::string etag;
    std::string location;  // answer 302 with this Location instead
    std::chrono::milliseconds delay{0};
  };

  explicit LoopbackServer(std::map<std::string, Document> docs, unsigned seed = 1,
                          std::chrono::milliseconds max_delay = std::chrono::milliseconds(0));
  ~LoopbackServer();
  LoopbackServer(const LoopbackServer&) = delete;
  LoopbackServer& operator=(const LoopbackServer&) = delete;

  std::string url(const std::string& path) const;
  int max_in_flight() const { return max_in_flight_.load(); }
  int requests() const { return requests_.load(); }
  void reset_counters();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::atomic<int> requests_{0};
};

}  // namespace testsupport
