#pragma once

#include <vector>

#include "qsl/graph.hpp"

namespace qsl {

// Hard cap for canonical_form; exhaustive-with-pruning search is only
// guaranteed cheap at enumeration scale.
inline constexpr int kCanonicalizationBound = 12;

// Iterated neighborhood refinement. Returns one color id per vertex; ids are
// assigned by sorted signature so they are isomorphism-invariant (the same
// graph under any relabeling yields the same multiset of colors, and
// corresponding vertices get equal ids).
std::vector<int> refine_colors(const Graph& g);

// Canonical representative of g's isomorphism class: the relabeling whose
// placement-order adjacency bitstring (vertex t contributes its adjacency
// bits to vertices placed before it) is lexicographically minimal over all
// orderings that respect the refinement color classes. Two graphs are
// isomorphic iff their canonical forms compare equal. Throws
// capability_error when n exceeds kCanonicalizationBound.
Graph canonical_form(const Graph& g);

// Isomorphism test without the size cap: color-refinement invariants first,
// then a backtracking vertex mapping. Intended for family-scale graphs
// (hundreds of vertices with rich degree structure), not dense regular
// worst cases.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace qsl
