#include "dcatkit/rdf/graph.hpp"

#include <algorithm>

#include "dcatkit/rdf/namespaces.hpp"

namespace dcatkit::rdf {

namespace {

void remove_pointer(std::unordered_map<Term, std::vector<const Triple*>, TermHash>& index,
                    const Term& key, const Triple* t) {
  auto it = index.find(key);
  if (it == index.end()) return;
  auto& bucket = it->second;
  bucket.erase(std::remove(bucket.begin(), bucket.end(), t), bucket.end());
  if (bucket.empty()) index.erase(it);
}

}  // namespace

Graph::Graph(const Graph& other)
    : triples_(other.triples_), prefixes_(other.prefixes_), next_blank_(other.next_blank_) {
  rebuild_indexes();
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    triples_ = other.triples_;
    prefixes_ = other.prefixes_;
    next_blank_ = other.next_blank_;
    rebuild_indexes();
  }
  return *this;
}

void Graph::rebuild_indexes() {
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
  for (const Triple& t : triples_) index(&t);
}

void Graph::index(const Triple* t) {
  by_subject_[t->subject].push_back(t);
  by_predicate_[t->predicate].push_back(t);
  by_object_[t->object].push_back(t);
}

void Graph::unindex(const Triple* t) {
  remove_pointer(by_subject_, t->subject, t);
  remove_pointer(by_predicate_, t->predicate, t);
  remove_pointer(by_object_, t->object, t);
}

bool Graph::insert(const Triple& t) {
  auto [it, inserted] = triples_.insert(t);
  if (inserted) index(&*it);
  return inserted;
}

bool Graph::erase(const Triple& t) {
  auto it = triples_.find(t);
  if (it == triples_.end()) return false;
  unindex(&*it);
  triples_.erase(it);
  return true;
}

bool Graph::contains(const Term& s, const Term& p, const Term& o) const {
  auto it = by_subject_.find(s);
  if (it == by_subject_.end()) return false;
  for (const Triple* t : it->second) {
    if (t->predicate == p && t->object == o) return true;
  }
  return false;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  if (!s && !p && !o) {
    out.assign(triples_.begin(), triples_.end());
    return out;
  }
  // Scan the smallest bucket among the bound positions.
  const std::vector<const Triple*>* best = nullptr;
  auto consider = [&best](const Index& index, const std::optional<Term>& key) -> bool {
    if (!key) return true;
    auto it = index.find(*key);
    if (it == index.end()) return false;
    if (best == nullptr || it->second.size() < best->size()) best = &it->second;
    return true;
  };
  if (!consider(by_subject_, s) || !consider(by_predicate_, p) || !consider(by_object_, o)) {
    return out;
  }
  for (const Triple* t : *best) {
    if ((!s || t->subject == *s) && (!p || t->predicate == *p) && (!o || t->object == *o)) {
      out.push_back(*t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  auto it = by_subject_.find(s);
  if (it == by_subject_.end()) return out;
  for (const Triple* t : it->second) {
    if (t->predicate == p) out.push_back(t->object);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Term> Graph::subjects(const Term& p, const Term& o) const {
  std::vector<Term> out;
  auto it = by_object_.find(o);
  if (it == by_object_.end()) return out;
  for (const Triple* t : it->second) {
    if (t->predicate == p) out.push_back(t->subject);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Term> Graph::object(const Term& s, const Term& p) const {
  auto all = objects(s, p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool Graph::has_type(const Term& node, const Term& type) const {
  static const Term rdf_type = iri(ns::rdf, "type");
  return contains(node, rdf_type, type);
}

std::vector<Term> Graph::subject_terms() const {
  std::vector<Term> out;
  out.reserve(by_subject_.size());
  for (const auto& [term, bucket] : by_subject_) out.push_back(term);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> Graph::blank_nodes() const {
  std::set<Term> out;
  for (const auto& [term, bucket] : by_subject_) {
    if (term.is_blank()) out.insert(term);
  }
  for (const auto& [term, bucket] : by_object_) {
    if (term.is_blank()) out.insert(term);
  }
  return {out.begin(), out.end()};
}

bool Graph::mentions(const Term& t) const {
  return by_subject_.count(t) != 0 || by_object_.count(t) != 0;
}

std::string Graph::fresh_blank_label(std::string_view stem) {
  for (;;) {
    std::string label = std::string(stem) + std::to_string(next_blank_++);
    if (!mentions(Term::blank(label))) return label;
  }
}

std::vector<Triple> graph_match(const Graph& g, const std::optional<Term>& s,
                                const std::optional<Term>& p, const std::optional<Term>& o) {
  return g.match(s, p, o);
}

Graph graph_merge(const Graph& a, const Graph& b, BlankNodePolicy policy) {
  Graph out = a;
  for (const auto& [prefix, ns_iri] : b.prefixes()) out.prefixes().emplace(prefix, ns_iri);
  if (policy == BlankNodePolicy::keep) {
    for (const Triple& t : b) out.insert(t);
    return out;
  }
  std::map<Term, Term> renamed;
  auto map_term = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto it = renamed.find(t);
    if (it != renamed.end()) return it->second;
    Term fresh = Term::blank(out.fresh_blank_label("m"));
    renamed.emplace(t, fresh);
    return fresh;
  };
  for (const Triple& t : b) {
    Term s = map_term(t.subject);
    Term o = map_term(t.object);
    out.insert(std::move(s), t.predicate, std::move(o));
  }
  return out;
}

const PrefixMap& default_prefixes() {
  static const PrefixMap prefixes = {
      {"adms", std::string(ns::adms)},     {"dcat", std::string(ns::dcat)},
      {"dcterms", std::string(ns::dcterms)}, {"dqv", std::string(ns::dqv)},
      {"foaf", std::string(ns::foaf)},     {"locn", std::string(ns::locn)},
      {"odrl", std::string(ns::odrl)},     {"prov", std::string(ns::prov)},
      {"rdf", std::string(ns::rdf)},       {"rdfs", std::string(ns::rdfs)},
      {"sdo", std::string(ns::sdo)},       {"skos", std::string(ns::skos)},
      {"time", std::string(ns::time)},     {"vcard", std::string(ns::vcard)},
      {"xsd", std::string(ns::xsd)},
  };
  return prefixes;
}

}  // namespace dcatkit::rdf
