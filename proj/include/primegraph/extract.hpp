#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/embed.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

// Pair sequences read off a chain X_0 < X_1 < ... < X_m of the neighbourhood
// lattice: f0[n] in X_{n+1}, f1[n] in X_n^+, f0[n] !~ f1[n], and
// f0[n] ~ f1[k] for n < k.
struct PairSequences {
  std::vector<Vertex> f0, f1;
  std::vector<VertexSet> chain;

  std::size_t size() const { return f0.size(); }
};

// Throws std::invalid_argument unless chain has at least two elements, is
// strictly increasing and every element satisfies X = X^{++}. At each step
// the least (a, b) with a != b is taken, falling back to a == b.
PairSequences chain_to_pair_sequences(const Graph& g, const std::vector<VertexSet>& chain);

// Positions of the four vertices a pair n < m looks at.
enum class BlockPosition { f0_n, f1_n, f0_m, f1_m };

// Colour of the index pair (n, m): for each of the six position pairs, one
// equality bit and one adjacency bit. Position pairs are numbered
// (f0_n,f1_n), (f0_n,f0_m), (f0_n,f1_m), (f1_n,f0_m), (f1_n,f1_m), (f0_m,f1_m);
// pair k uses bit 2k for equality and bit 2k+1 for adjacency.
std::uint32_t pair_block(const Graph& g, const std::vector<Vertex>& f0, const std::vector<Vertex>& f1,
                         std::size_t n, std::size_t m);
bool block_equal(std::uint32_t block, BlockPosition a, BlockPosition b);
bool block_adjacent(std::uint32_t block, BlockPosition a, BlockPosition b);

enum class HomogenizeMode { automatic, greedy, exact };

struct Homogeneous {
  // Increasing indices; every pair of them has colour block.
  std::vector<std::size_t> indices;
  // Unset when fewer than two indices were returned.
  std::optional<std::uint32_t> block;
  // Distinct colours among all index pairs of the input.
  std::size_t occupied_blocks = 0;
};

// exact: largest index set of one admissible colour (input length <= 40;
// longer inputs fall back to greedy). greedy: pivot sequence where each pivot
// keeps its largest admissible colour class, then the pivots of the most
// frequent colour. automatic picks exact when it applies.
Homogeneous homogenize(const Graph& g, const std::vector<Vertex>& f0, const std::vector<Vertex>& f1,
                       HomogenizeMode mode = HomogenizeMode::automatic,
                       const std::function<bool(std::uint32_t)>& admissible = {});
Homogeneous homogenize(const Graph& g, const PairSequences& seqs, HomogenizeMode mode = HomogenizeMode::automatic,
                       const std::function<bool(std::uint32_t)>& admissible = {});

enum class ExtractionKind { g0_prefix, g1_prefix, g2_prefix, g3_prefix, failed_below_threshold };

std::string to_string(ExtractionKind kind);
// Family of a successful kind.
Family extraction_family(ExtractionKind kind);

struct ExtractionResult {
  ExtractionKind kind = ExtractionKind::failed_below_threshold;
  std::size_t m = 0;
  // Induced copy of gen_graph(extraction_family(kind), m) in g.
  EmbeddingMap witness;
  // Number of elements of the chain used (bipartite mode) or of the chosen
  // lattice element's up-set (sparse mode).
  std::size_t chain_length = 0;
  std::size_t occupied_blocks = 0;
  // Lattice element X whose X^+ carried the prefix (sparse mode).
  std::optional<VertexSet> anchor;
  // Clique found when only clique-side uniform blocks were available.
  std::optional<VertexSet> clique;
  std::string note;
};

// Long chain in N(g)^ to an induced G0 or G1 prefix.
ExtractionResult extract_g0_or_g1(const Graph& g, HomogenizeMode mode = HomogenizeMode::automatic);

// Prime g to an induced G2 or G3 prefix. Candidates X are the maximal members
// of {X : |up(X)| >= s_threshold}, by decreasing |up(X)| and then canonical
// order, followed by the empty set. For each X a component of g[X^+] with more
// than s_threshold vertices yields a G2 prefix from its longest induced path,
// and the small components yield a G3 prefix with apex in X. The largest
// prefix wins, earlier candidates breaking ties. Throws std::invalid_argument
// when g is not prime.
ExtractionResult extract_g2_or_g3(const Graph& g, std::size_t s_threshold = 3,
                                  HomogenizeMode mode = HomogenizeMode::automatic);

// Longest induced path as a vertex sequence; the search stops after max_nodes
// extensions and returns the longest path seen.
std::vector<Vertex> longest_induced_path(const Graph& g, const VertexSet& within,
                                         std::uint64_t max_nodes = 10'000'000);

}  // namespace primegraph
