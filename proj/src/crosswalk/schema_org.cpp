#include "dcatkit/crosswalk/schema_org.hpp"

#include <deque>
#include <set>

#include "dcatkit/dcat/temporal.hpp"
#include "dcatkit/dcat/terms.hpp"
#include "dcatkit/dcat/views.hpp"
#include "dcatkit/dcat/vocabulary.hpp"
#include "dcatkit/error.hpp"
#include "dcatkit/validate/codelists.hpp"

namespace dcatkit::crosswalk {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

std::optional<std::string> temporal_interval(const Graph& g, const Term& period) {
  try {
    const dcat::PeriodOfTime p = dcat::parse_period(g, period);
    return (p.start ? p.start->value.lexical() : std::string("..")) + "/" +
           (p.end ? p.end->value.lexical() : std::string(".."));
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

class Exporter {
 public:
  Exporter(const Graph& g, const MappingTable& table) : g_(g), table_(table), ax_(dcat::load_vocabulary()) {
    for (const auto& [prefix, ns_iri] : rdf::default_prefixes()) {
      if (prefix == "sdo" || prefix == "xsd" || prefix == "rdf") out_.graph.prefixes()[prefix] = ns_iri;
    }
  }

  CrosswalkResult run(const Term& root) {
    std::deque<Term> queue{root};
    std::set<Term> visited{root};
    while (!queue.empty()) {
      const Term node = queue.front();
      queue.pop_front();
      for (const Term& next : export_node(node)) {
        if (visited.insert(next).second) queue.push_back(next);
      }
    }
    return std::move(out_);
  }

 private:
  // True when another type of the node is a strict subclass of `type`.
  bool entailed_type(const std::vector<Term>& types, const Term& type) const {
    for (const Term& other : types) {
      if (other != type && other.is_iri() && ax_.is_subclass_of(other.value(), type.value())) return true;
    }
    return false;
  }

  // True when (node, p', object) exists for a strict sub-property p' of p.
  bool entailed_statement(const Triple& t) const {
    for (const std::string& sub : ax_.property_descendants(t.predicate.value())) {
      if (sub != t.predicate.value() && g_.contains(t.subject, Term::iri(sub), t.object)) return true;
    }
    return false;
  }

  void lose(const Triple& t, const std::string& term) {
    std::string reason = table_.unmapped_reason(term);
    if (reason.empty()) reason = "not in the mapping table";
    out_.losses.push_back({t, reason});
  }

  std::vector<Term> export_node(const Term& node) {
    std::vector<Term> reach;
    const std::vector<Term> types = g_.objects(node, terms::rdf_::type);
    for (const Triple& t : g_.match(node, std::nullopt, std::nullopt)) {
      if (t.predicate == terms::rdf_::type) {
        if (!t.object.is_iri() || entailed_type(types, t.object)) {
          if (!t.object.is_iri()) lose(t, "");
          continue;
        }
        if (const MappingEntry* m = table_.find_class(t.object.value())) {
          out_.graph.insert(node, terms::rdf_::type, Term::iri(m->target));
        } else {
          lose(t, t.object.value());
        }
        continue;
      }
      if (entailed_statement(t)) continue;
      const MappingEntry* m = table_.find_property(t.predicate.value());
      if (m == nullptr) {
        lose(t, t.predicate.value());
        continue;
      }
      const Term target = Term::iri(m->target);
      switch (m->conversion) {
        case Conversion::copy:
          out_.graph.insert(node, target, t.object);
          if (t.object.is_resource()) reach.push_back(t.object);
          break;
        case Conversion::media_type: {
          const std::string mt = t.object.is_iri() ? validate::media_type_of(t.object) : std::string();
          if (!mt.empty()) {
            out_.graph.insert(node, target, Term::literal(mt));
          } else {
            out_.graph.insert(node, target, t.object);
            if (t.object.is_resource()) reach.push_back(t.object);
          }
          break;
        }
        case Conversion::interval:
          if (t.object.is_literal()) {
            out_.graph.insert(node, target, Term::literal(t.object.lexical()));
          } else if (auto interval = temporal_interval(g_, t.object)) {
            out_.graph.insert(node, target, Term::literal(*interval));
          } else {
            out_.losses.push_back({t, "period of time has no bounds to export"});
          }
          break;
      }
    }
    return reach;
  }

  const Graph& g_;
  const MappingTable& table_;
  const dcat::VocabularyAxioms& ax_;
  CrosswalkResult out_;
};

}  // namespace

CrosswalkResult to_schema_org(const Graph& g, const Term& root, const MappingTable& table) {
  if (!root.is_resource() || !(dcat::has_effective_type(g, root, terms::dcat::Dataset) ||
                               dcat::has_effective_type(g, root, terms::dcat::Distribution))) {
    throw Error(ErrorCode::RootNotExportable, root.to_string() + " is not a dataset, catalog or distribution");
  }
  CrosswalkResult result = Exporter(g, table).run(root);
  std::sort(result.losses.begin(), result.losses.end(),
            [](const Loss& a, const Loss& b) { return std::tie(a.triple, a.reason) < std::tie(b.triple, b.reason); });
  return result;
}

}  // namespace dcatkit::crosswalk
