#pragma once

#include <cstdint>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

// Graphs with at most this many vertices have a canonical code.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

// Canonical code: the least upper-triangle adjacency string, pairs in column
// order (0,1), (0,2), (1,2), (0,3), ..., first pair most significant, taken
// over all labellings that list vertices by nondecreasing degree. Two graphs
// of the same order share a code iff they are isomorphic. Throws GuardExceeded
// above kMaxCanonicalOrder vertices.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);
// g relabelled so that its adjacency string is the canonical code.
Graph canonical_form(const Graph& g);

enum class GraphFilter { all, bipartite, prime };

// One canonically labelled representative per isomorphism class, in increasing
// code order. Guarded to n <= 8.
std::vector<Graph> enumerate_graphs(std::size_t n, GraphFilter filter = GraphFilter::all);

// Every poset on 0..n-1 whose labelling is a linear extension (u < v implies
// u < v as integers). Each isomorphism class occurs at least once. Guarded to
// n <= 7.
std::vector<Poset> enumerate_posets(std::size_t n);

}  // namespace primegraph
