#pragma once

#include <map>
#include <optional>

#include "dcatkit/rdf/graph.hpp"

namespace dcatkit::rdf {

using BlankMapping = std::map<Term, Term>;

/// Finds a bijection between the blank nodes of `a` and `b` under which the
/// two triple sets are equal. Colour refinement prunes the search; each
/// candidate mapping is verified triple by triple before it is returned.
std::optional<BlankMapping> find_isomorphism(const Graph& a, const Graph& b);

inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace dcatkit::rdf
