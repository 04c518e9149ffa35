#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcatkit/rdf/term.hpp"

namespace dcatkit::rdf {

using PrefixMap = std::map<std::string, std::string>;

/// A set of triples with subject, predicate and object indexes.
///
/// Iteration is in Triple order, so every traversal is deterministic.
/// All const members are safe to call concurrently on a graph that is no
/// longer being modified.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  /// Returns false when the triple was already present.
  bool insert(const Triple& t);
  bool insert(Term s, Term p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }
  bool erase(const Triple& t);
  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  bool contains(const Term& s, const Term& p, const Term& o) const;

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  /// Triples matching every bound position, in Triple order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// Sorted, de-duplicated objects of (s, p, *).
  std::vector<Term> objects(const Term& s, const Term& p) const;
  /// Sorted, de-duplicated subjects of (*, p, o).
  std::vector<Term> subjects(const Term& p, const Term& o) const;
  /// Smallest object of (s, p, *), if any.
  std::optional<Term> object(const Term& s, const Term& p) const;
  bool has_type(const Term& node, const Term& type) const;

  /// Sorted, de-duplicated terms appearing in subject position.
  std::vector<Term> subject_terms() const;
  /// Sorted blank nodes appearing anywhere.
  std::vector<Term> blank_nodes() const;
  /// True when the term appears as subject or object.
  bool mentions(const Term& t) const;

  /// A blank label not currently used in the graph.
  std::string fresh_blank_label(std::string_view stem = "b");

  PrefixMap& prefixes() noexcept { return prefixes_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  using Index = std::unordered_map<Term, std::vector<const Triple*>, TermHash>;

  void index(const Triple* t);
  void unindex(const Triple* t);
  void rebuild_indexes();

  std::set<Triple> triples_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
  PrefixMap prefixes_;
  std::size_t next_blank_ = 0;
};

enum class BlankNodePolicy { rename, keep };

/// All triples matching the pattern; unbound positions match anything.
std::vector<Triple> graph_match(const Graph& g, const std::optional<Term>& s,
                                const std::optional<Term>& p, const std::optional<Term>& o);

/// Union of a and b. Under `rename` every blank label of b is rewritten to a
/// label unused in the result; prefix bindings of a win on conflict.
Graph graph_merge(const Graph& a, const Graph& b, BlankNodePolicy policy = BlankNodePolicy::rename);

/// The namespace bindings the toolkit writes by default.
const PrefixMap& default_prefixes();

}  // namespace dcatkit::rdf
