#include "dcatkit/rdf/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

namespace dcatkit::rdf {

namespace {

struct Edge {
  int direction;  // 0: node is subject, 1: node is object
  int predicate;
  int other_blank;  // index into the side's blank list, or -1
  int ground;       // interned id of a non-blank term, or -1
};

struct Side {
  std::vector<Term> blanks;
  std::map<Term, int> index;
  std::vector<std::vector<Edge>> edges;
};

using Colors = std::vector<int>;

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  std::optional<BlankMapping> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    build(a_, sa_);
    build(b_, sb_);
    if (sa_.blanks.size() != sb_.blanks.size()) return std::nullopt;
    if (!ground_triples_equal()) return std::nullopt;
    Colors ca(sa_.blanks.size(), 0);
    Colors cb(sb_.blanks.size(), 0);
    if (!refine(ca, cb)) return std::nullopt;
    return search(ca, cb);
  }

 private:
  int intern(const Term& t) {
    auto [it, inserted] = terms_.emplace(t, static_cast<int>(terms_.size()));
    return it->second;
  }

  void build(const Graph& g, Side& side) {
    side.blanks = g.blank_nodes();
    for (std::size_t i = 0; i < side.blanks.size(); ++i) side.index.emplace(side.blanks[i], static_cast<int>(i));
    side.edges.assign(side.blanks.size(), {});
    for (const Triple& t : g) {
      const int p = intern(t.predicate);
      const bool sb = t.subject.is_blank();
      const bool ob = t.object.is_blank();
      if (sb) {
        const int s = side.index.at(t.subject);
        side.edges[s].push_back(Edge{0, p, ob ? side.index.at(t.object) : -1, ob ? -1 : intern(t.object)});
      }
      if (ob) {
        const int o = side.index.at(t.object);
        side.edges[o].push_back(Edge{1, p, sb ? side.index.at(t.subject) : -1, sb ? -1 : intern(t.subject)});
      }
    }
  }

  bool ground_triples_equal() const {
    std::set<Triple> ga;
    std::set<Triple> gb;
    for (const Triple& t : a_) {
      if (!t.subject.is_blank() && !t.object.is_blank()) ga.insert(t);
    }
    for (const Triple& t : b_) {
      if (!t.subject.is_blank() && !t.object.is_blank()) gb.insert(t);
    }
    return ga == gb;
  }

  static std::vector<int> signature(const Side& side, const Colors& colors, int node) {
    std::vector<std::array<int, 4>> parts;
    parts.reserve(side.edges[node].size());
    for (const Edge& e : side.edges[node]) {
      parts.push_back({e.direction, e.predicate, e.other_blank >= 0 ? colors[e.other_blank] : -1, e.ground});
    }
    std::sort(parts.begin(), parts.end());
    std::vector<int> sig;
    sig.reserve(1 + parts.size() * 4);
    sig.push_back(colors[node]);
    for (const auto& p : parts) sig.insert(sig.end(), p.begin(), p.end());
    return sig;
  }

  static std::size_t distinct(const Colors& ca, const Colors& cb) {
    std::set<int> all(ca.begin(), ca.end());
    all.insert(cb.begin(), cb.end());
    return all.size();
  }

  static bool same_histogram(const Colors& ca, const Colors& cb) {
    std::map<int, int> ha;
    std::map<int, int> hb;
    for (int c : ca) ++ha[c];
    for (int c : cb) ++hb[c];
    return ha == hb;
  }

  // Refines both colourings in lockstep with a shared signature dictionary,
  // so equal colours on the two sides denote equal neighbourhoods.
  bool refine(Colors& ca, Colors& cb) const {
    std::size_t classes = distinct(ca, cb);
    for (;;) {
      std::map<std::vector<int>, int> dictionary;
      auto recolor = [&dictionary](const Side& side, const Colors& colors) {
        Colors next(colors.size());
        for (std::size_t i = 0; i < colors.size(); ++i) {
          auto sig = signature(side, colors, static_cast<int>(i));
          auto [it, inserted] = dictionary.emplace(std::move(sig), static_cast<int>(dictionary.size()));
          next[i] = it->second;
        }
        return next;
      };
      Colors na = recolor(sa_, ca);
      Colors nb = recolor(sb_, cb);
      ca = std::move(na);
      cb = std::move(nb);
      if (!same_histogram(ca, cb)) return false;
      const std::size_t now = distinct(ca, cb);
      if (now == classes) return true;
      classes = now;
    }
  }

  std::optional<BlankMapping> search(const Colors& ca, const Colors& cb) {
    std::map<int, std::vector<int>> class_a;
    std::map<int, std::vector<int>> class_b;
    for (std::size_t i = 0; i < ca.size(); ++i) class_a[ca[i]].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < cb.size(); ++i) class_b[cb[i]].push_back(static_cast<int>(i));

    int target = -1;
    std::size_t target_size = 0;
    for (const auto& [color, members] : class_a) {
      if (members.size() > 1 && (target < 0 || members.size() < target_size)) {
        target = color;
        target_size = members.size();
      }
    }
    if (target < 0) return verify(ca, cb, class_b);

    const int fresh = 1 + std::max(*std::max_element(ca.begin(), ca.end()),
                                   *std::max_element(cb.begin(), cb.end()));
    const int x = class_a[target].front();
    for (int y : class_b[target]) {
      Colors na = ca;
      Colors nb = cb;
      na[x] = fresh;
      nb[y] = fresh;
      if (!refine(na, nb)) continue;
      if (auto found = search(na, nb)) return found;
    }
    return std::nullopt;
  }

  std::optional<BlankMapping> verify(const Colors& ca, const Colors&,
                                     const std::map<int, std::vector<int>>& class_b) const {
    BlankMapping mapping;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      auto it = class_b.find(ca[i]);
      if (it == class_b.end() || it->second.size() != 1) return std::nullopt;
      mapping.emplace(sa_.blanks[i], sb_.blanks[it->second.front()]);
    }
    auto map_term = [&mapping](const Term& t) { return t.is_blank() ? mapping.at(t) : t; };
    for (const Triple& t : a_) {
      if (!b_.contains(Triple(map_term(t.subject), t.predicate, map_term(t.object)))) return std::nullopt;
    }
    return mapping;
  }

  const Graph& a_;
  const Graph& b_;
  Side sa_;
  Side sb_;
  std::map<Term, int> terms_;
};

}  // namespace

std::optional<BlankMapping> find_isomorphism(const Graph& a, const Graph& b) {
  return Matcher(a, b).run();
}

}  // namespace dcatkit::rdf
