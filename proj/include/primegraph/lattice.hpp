#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "primegraph/graph.hpp"
#include "primegraph/search.hpp"

namespace primegraph {

// A finite family of subsets of 0..universe_size-1 closed under intersection,
// ordered by inclusion. Elements are kept in canonical order (cardinality, then
// lexicographic), so the least element comes first and the universe last.
struct Lattice {
  std::size_t universe_size = 0;
  std::vector<VertexSet> elements;
  // Hasse diagram as (lower, upper) index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const VertexSet& x) const;
  // Number of elements containing elements[i], i itself included.
  std::size_t up_set_size(std::size_t i) const;
  std::vector<std::size_t> lower_covers(std::size_t i) const;
  bool is_chain() const;
};

// Sorts, deduplicates and computes covers. Does not close the family.
Lattice make_lattice(std::size_t universe_size, std::vector<VertexSet> family);
bool is_intersection_closed(const Lattice& l);

// All intersections of the column sets R^{-1}(y), together with E itself.
Lattice galois_lattice(const IncidenceStructure& r);
// The neighbourhood lattice: galois_lattice(graph_incidence(g)).
Lattice neighborhood_lattice(const Graph& g);

// X^+ = intersection of N(x) over x in X; the whole vertex set when X is empty.
VertexSet plus_operator(const Graph& g, const VertexSet& x);

struct FerrersViolation {
  Vertex x, x_prime, y, y_prime;  // x rho y, x' rho y', not x rho y', not x' rho y
};
std::optional<FerrersViolation> ferrers_violation(const IncidenceStructure& r);
inline bool is_ferrers(const IncidenceStructure& r) { return !ferrers_violation(r).has_value(); }

// Longest strictly increasing chain as lattice indices, least element first.
std::vector<std::size_t> longest_chain(const Lattice& l);

// Reflexive order on 0..n-1 as a dense matrix; sized for lattices beyond the
// VertexSet capacity.
class FiniteOrder {
 public:
  FiniteOrder() = default;
  explicit FiniteOrder(std::size_t n) : n_(n), le_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) set_le(i, i);
  }
  std::size_t size() const { return n_; }
  bool le(std::size_t i, std::size_t j) const { return le_[i * n_ + j] != 0; }
  void set_le(std::size_t i, std::size_t j) { le_[i * n_ + j] = 1; }
  FiniteOrder dual() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> le_;
};

FiniteOrder inclusion_order(const Lattice& l);

struct SearchLimits {
  std::size_t max_elements = 2000;
  std::uint64_t max_nodes = 10'000'000;
};

// Bijection phi with i <= j iff phi(i) <= phi(j).
SearchResult<std::vector<std::size_t>> find_order_isomorphism(const FiniteOrder& a, const FiniteOrder& b,
                                                               const SearchLimits& limits = {});
// Injective phi with i <= j iff phi(i) <= phi(j).
SearchResult<std::vector<std::size_t>> find_order_embedding(const FiniteOrder& a, const FiniteOrder& b,
                                                             const SearchLimits& limits = {});

// Anti-automorphism of l, as a permutation of element indices.
SearchResult<std::vector<std::size_t>> is_self_dual(const Lattice& l, const SearchLimits& limits = {});
// Isomorphism from Gal(R^{-1}) onto the dual of Gal(R).
SearchResult<std::vector<std::size_t>> dual_galois_check(const IncidenceStructure& r,
                                                          const SearchLimits& limits = {});
SearchResult<std::vector<std::size_t>> order_embeds(const Lattice& a, const Lattice& b,
                                                     const SearchLimits& limits = {});

// Maps f: E -> E', g: F -> F' with x rho y iff f(x) rho' g(y). Neither map
// needs to be injective.
struct CodingWitness {
  std::vector<Vertex> f;
  std::vector<Vertex> g;
};

bool verify_coding(const IncidenceStructure& small, const IncidenceStructure& big, const CodingWitness& w);
SearchResult<CodingWitness> find_coding(const IncidenceStructure& small, const IncidenceStructure& big,
                                        std::uint64_t max_nodes = 10'000'000);

}  // namespace primegraph
