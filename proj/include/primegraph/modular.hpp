#pragma once

#include <optional>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

struct PrimalityReport {
  // Indecomposable with more than three vertices.
  bool prime = false;
  // Only trivial autonomous sets. Graphs on at most two vertices are
  // indecomposable; none on three vertices is.
  bool indecomposable = false;
  // n <= 3.
  bool trivial_size = false;
  // A nontrivial autonomous set of least size; present iff !indecomposable.
  std::optional<VertexSet> witness;
};

bool is_autonomous(const Graph& g, const VertexSet& a);

// Smallest autonomous set containing seed. Each round adds every outside vertex
// that separates two members, until no separator remains.
VertexSet autonomous_closure(const Graph& g, const VertexSet& seed);

PrimalityReport is_prime_graph(const Graph& g);

bool is_point_determining(const Graph& g);

struct PointDeterminingQuotient {
  Graph quotient;
  // classes[i] is the vertex class represented by quotient vertex i; classes
  // are ordered by least member.
  std::vector<VertexSet> classes;
};

PointDeterminingQuotient point_determining_quotient(const Graph& g);

// Poset autonomy: for v outside A and a, a' in A, v < a implies v < a' and
// a < v implies a' < v.
bool is_autonomous(const Poset& p, const VertexSet& a);
VertexSet autonomous_closure(const Poset& p, const VertexSet& seed);
PrimalityReport is_prime_poset(const Poset& p);

}  // namespace primegraph
