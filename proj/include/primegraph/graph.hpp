#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "primegraph/vertex_set.hpp"

namespace primegraph {

using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected loopless graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adjacency_.size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  std::size_t edge_count() const;
  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<VertexSet> adjacency_;
};

// Finite strict partial order on 0..n-1, stored as the full relation.
class Poset {
 public:
  Poset() = default;
  // Antichain on n elements.
  explicit Poset(std::size_t n);

  // Validates irreflexivity, antisymmetry and transitivity of the given pairs;
  // throws std::invalid_argument otherwise. The relation is not closed.
  static Poset from_relation(std::size_t n, const std::vector<Edge>& less_than);
  // Same validation; up[u] = {v : u < v}.
  static Poset from_up_sets(std::vector<VertexSet> up);
  // Transitive closure of the given pairs. Throws if the pairs contain a cycle.
  static Poset closure_of(std::size_t n, const std::vector<Edge>& generators);

  std::size_t size() const { return up_.size(); }
  bool less(Vertex u, Vertex v) const { return up_[u].contains(v); }
  bool comparable(Vertex u, Vertex v) const { return less(u, v) || less(v, u); }
  const VertexSet& above(Vertex u) const { return up_[u]; }
  const VertexSet& below(Vertex u) const { return down_[u]; }

  std::vector<Edge> relation() const;
  // Cover pairs (u, v): u < v with nothing strictly between.
  std::vector<Edge> covers() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  void rebuild_down();
  std::vector<VertexSet> up_;
  std::vector<VertexSet> down_;
};

// Incidence structure (E, rho, F) with E = 0..e_size-1 and F = 0..f_size-1.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::size_t e_size, std::size_t f_size);

  std::size_t e_size() const { return rows_.size(); }
  std::size_t f_size() const { return f_size_; }

  void relate(Vertex x, Vertex y, bool value = true);
  bool related(Vertex x, Vertex y) const { return rows_[x].contains(y); }
  // R(x) = {y : x rho y}
  const VertexSet& row(Vertex x) const { return rows_[x]; }
  // R^{-1}(y) = {x : x rho y}
  VertexSet column(Vertex y) const;

  IncidenceStructure inverse() const;
  IncidenceStructure negation() const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::size_t f_size_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);
// Graph induced on a, relabelled to 0..|a|-1 in increasing label order.
Graph induced(const Graph& g, const VertexSet& a);
VertexSet neighborhood(const Graph& g, Vertex x);

Graph comparability_graph(const Poset& p);
Graph incomparability_graph(const Poset& p);
Poset dual_poset(const Poset& p);

// (V, E-bar, V): x rho y iff x ~ y. Its columns are the neighbourhoods.
IncidenceStructure graph_incidence(const Graph& g);

// Relabel g so that vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
// When g is bipartite and side_zero is given, stores one colour class of a two-colouring.
bool is_bipartite(const Graph& g, VertexSet* side_zero = nullptr);

}  // namespace primegraph
