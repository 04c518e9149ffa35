#include "dcatkit/dcat/vocabulary.hpp"

#include <deque>
#include <functional>

#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/syntax/ntriples.hpp"

namespace dcatkit::data {
extern const std::string_view vocabulary_nt;
}

namespace dcatkit::dcat {

namespace {

using Edges = std::map<std::string, std::set<std::string>>;

// Transitive closure of a parent relation; throws on cycles.
std::map<std::string, std::set<std::string>> ancestors_of(const std::set<VocabularyAxioms::Pair>& pairs,
                                                          std::string_view what) {
  Edges parents;
  for (const auto& [child, parent] : pairs) parents[child].insert(parent);

  std::map<std::string, std::set<std::string>> up;
  std::set<std::string> on_stack;
  std::function<const std::set<std::string>&(const std::string&)> visit = [&](const std::string& node)
      -> const std::set<std::string>& {
    if (auto it = up.find(node); it != up.end()) return it->second;
    if (!on_stack.insert(node).second) {
      throw Error(ErrorCode::CorruptVocabularyFile, std::string(what) + " lattice has a cycle through <" + node + ">");
    }
    std::set<std::string> acc;
    if (auto it = parents.find(node); it != parents.end()) {
      for (const std::string& p : it->second) {
        acc.insert(p);
        const auto& above = visit(p);
        acc.insert(above.begin(), above.end());
      }
    }
    on_stack.erase(node);
    return up.emplace(node, std::move(acc)).first->second;
  };
  for (const auto& [child, _] : parents) visit(child);
  return up;
}

const std::set<std::string>& empty_set() {
  static const std::set<std::string> none;
  return none;
}

}  // namespace

const std::set<std::string>& VocabularyAxioms::class_ancestors(const std::string& iri) const {
  auto it = class_up_.find(iri);
  return it == class_up_.end() ? empty_set() : it->second;
}

const std::set<std::string>& VocabularyAxioms::property_ancestors(const std::string& iri) const {
  auto it = property_up_.find(iri);
  return it == property_up_.end() ? empty_set() : it->second;
}

std::set<std::string> VocabularyAxioms::class_descendants(const std::string& iri) const {
  std::set<std::string> out{iri};
  for (const auto& [child, above] : class_up_) {
    if (above.count(iri) != 0) out.insert(child);
  }
  return out;
}

std::set<std::string> VocabularyAxioms::property_descendants(const std::string& iri) const {
  std::set<std::string> out{iri};
  for (const auto& [child, above] : property_up_) {
    if (above.count(iri) != 0) out.insert(child);
  }
  return out;
}

bool VocabularyAxioms::is_subclass_of(const std::string& child, const std::string& ancestor) const {
  return class_ancestors(child).count(ancestor) != 0;
}

bool VocabularyAxioms::is_subproperty_of(const std::string& child, const std::string& ancestor) const {
  return property_ancestors(child).count(ancestor) != 0;
}

VocabularyAxioms parse_vocabulary(std::string_view text) {
  const syntax::ParseResult parsed = syntax::parse_ntriples(text);
  if (!parsed.ok()) {
    throw Error(ErrorCode::CorruptVocabularyFile, "vocabulary file: " + parsed.diagnostics.errors.front().to_string());
  }
  VocabularyAxioms ax;
  for (const rdf::Triple& t : parsed.graph) {
    if (t.predicate == terms::rdfs::subClassOf || t.predicate == terms::rdfs::subPropertyOf) {
      if (!t.subject.is_iri() || !t.object.is_iri()) {
        throw Error(ErrorCode::CorruptVocabularyFile, "lattice axiom between non-IRI terms: " + t.to_string());
      }
      auto& pairs = t.predicate == terms::rdfs::subClassOf ? ax.subclass_ : ax.subproperty_;
      pairs.emplace(t.subject.value(), t.object.value());
    } else if (t.predicate == terms::rdf_::type && t.subject.is_iri()) {
      if (t.object == terms::rdfs::Class) ax.classes_.insert(t.subject.value());
      if (t.object == terms::rdf_::Property) ax.properties_.insert(t.subject.value());
    } else if (t.predicate == terms::rdfs::comment && t.subject.is_iri() && t.object.is_literal()) {
      ax.notes_[t.subject.value()] = t.object.lexical();
    }
  }
  ax.class_up_ = ancestors_of(ax.subclass_, "class");
  ax.property_up_ = ancestors_of(ax.subproperty_, "property");
  return ax;
}

std::string_view vocabulary_source() { return data::vocabulary_nt; }

const VocabularyAxioms& load_vocabulary() {
  static const VocabularyAxioms axioms = parse_vocabulary(data::vocabulary_nt);
  return axioms;
}

rdf::Graph infer_closure(const rdf::Graph& g, const VocabularyAxioms& ax) {
  rdf::Graph out = g;
  std::deque<rdf::Triple> work(g.begin(), g.end());
  while (!work.empty()) {
    const rdf::Triple t = std::move(work.front());
    work.pop_front();
    if (t.predicate == terms::rdf_::type && t.object.is_iri()) {
      for (const std::string& parent : ax.class_ancestors(t.object.value())) {
        rdf::Triple derived(t.subject, terms::rdf_::type, rdf::Term::iri(parent));
        if (out.insert(derived)) work.push_back(std::move(derived));
      }
    }
    for (const std::string& parent : ax.property_ancestors(t.predicate.value())) {
      rdf::Triple derived(t.subject, rdf::Term::iri(parent), t.object);
      if (out.insert(derived)) work.push_back(std::move(derived));
    }
  }
  return out;
}

}  // namespace dcatkit::dcat
