#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/families.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/search.hpp"

namespace primegraph {

inline constexpr std::uint64_t kDefaultEmbedNodes = 50'000'000;

// map[v] is the image of pattern vertex v.
using EmbeddingMap = std::vector<Vertex>;

// Injective, preserves edges and non-edges.
bool verify_embedding(const Graph& h, const Graph& g, const EmbeddingMap& map);

// Induced copy of h in g. Pattern vertices are placed most-constrained first,
// starting from a vertex of least degree.
SearchResult<EmbeddingMap> induced_embedding(const Graph& h, const Graph& g,
                                             std::uint64_t max_nodes = kDefaultEmbedNodes);

struct PrefixResult {
  // Largest m <= k_max with the family at size m induced in g; 0 if none.
  std::size_t m = 0;
  EmbeddingMap map;
  // inconclusive when some probe ran out of budget; m is then a lower bound.
  SearchStatus status = SearchStatus::found;
};

// The size field of family is ignored. Prefixes of a family form an induced
// chain, so the largest one is found by binary search.
PrefixResult largest_family_prefix(const Graph& g, const FamilySpec& family, std::size_t k_max,
                                   std::uint64_t max_nodes = kDefaultEmbedNodes);

struct ExtremalSets {
  VertexSet clique;
  VertexSet independent;
};

VertexSet maximum_clique(const Graph& g);
ExtremalSets extremal_sets(const Graph& g);

struct SeparationOptions {
  std::size_t size_max = 6;
  std::size_t n_probe = 8;
  std::size_t probe_bound = 12;
};

struct Separation {
  SearchStatus status = SearchStatus::none;
  // Canonically labelled H with H <= fam_a(n_probe) and H not <= fam_b(m)
  // for every m <= probe_bound.
  std::optional<Graph> witness;
  EmbeddingMap into_a;
  std::string caveat;
};

// Candidates are the induced subgraphs of fam_a(n_probe), by increasing size
// and then canonical code; the first that separates is returned. The size
// fields of fam_a and fam_b are ignored.
Separation separating_witness(const FamilySpec& fam_a, const FamilySpec& fam_b, const SeparationOptions& options = {});

}  // namespace primegraph
