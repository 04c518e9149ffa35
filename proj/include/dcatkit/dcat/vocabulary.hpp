#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::dcat {

/// The DCAT 2 class and property lattice plus the declared term set.
class VocabularyAxioms {
 public:
  using Pair = std::pair<std::string, std::string>;  // (child, parent)

  const std::set<Pair>& subclass_pairs() const noexcept { return subclass_; }
  const std::set<Pair>& subproperty_pairs() const noexcept { return subproperty_; }
  const std::map<std::string, std::string>& term_notes() const noexcept { return notes_; }
  const std::set<std::string>& classes() const noexcept { return classes_; }
  const std::set<std::string>& properties() const noexcept { return properties_; }

  /// Transitive ancestors, excluding the term itself.
  const std::set<std::string>& class_ancestors(const std::string& iri) const;
  const std::set<std::string>& property_ancestors(const std::string& iri) const;

  /// The term itself plus every transitive descendant.
  std::set<std::string> class_descendants(const std::string& iri) const;
  std::set<std::string> property_descendants(const std::string& iri) const;

  bool is_subclass_of(const std::string& child, const std::string& ancestor) const;
  bool is_subproperty_of(const std::string& child, const std::string& ancestor) const;

 private:
  friend VocabularyAxioms parse_vocabulary(std::string_view text);

  std::set<Pair> subclass_;
  std::set<Pair> subproperty_;
  std::map<std::string, std::string> notes_;
  std::set<std::string> classes_;
  std::set<std::string> properties_;
  std::map<std::string, std::set<std::string>> class_up_;
  std::map<std::string, std::set<std::string>> property_up_;
};

/// Builds axioms from an N-Triples vocabulary document. Throws
/// Error(CorruptVocabularyFile) on parse errors or a cyclic lattice.
VocabularyAxioms parse_vocabulary(std::string_view text);

/// The shipped vocabulary, parsed once.
const VocabularyAxioms& load_vocabulary();

/// The shipped vocabulary file as N-Triples text.
std::string_view vocabulary_source();

/// g plus every rdf:type triple entailed by the subclass lattice and every
/// triple entailed by the subproperty lattice. Input triples are kept.
rdf::Graph infer_closure(const rdf::Graph& g, const VocabularyAxioms& ax);
inline rdf::Graph infer_closure(const rdf::Graph& g) { return infer_closure(g, load_vocabulary()); }

}  // namespace dcatkit::dcat
