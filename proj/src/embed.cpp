#include "primegraph/embed.hpp"

#include <algorithm>
#include <map>

#include "primegraph/census.hpp"

namespace primegraph {

bool verify_embedding(const Graph& h, const Graph& g, const EmbeddingMap& map) {
  if (map.size() != h.order()) return false;
  VertexSet image;
  for (Vertex t : map) {
    if (t >= g.order() || image.contains(t)) return false;
    image.insert(t);
  }
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v) != g.adjacent(map[u], map[v])) return false;
  return true;
}

namespace {

class Embedder {
 public:
  Embedder(const Graph& h, const Graph& g, std::uint64_t max_nodes) : h_(h), g_(g), budget_(max_nodes) {
    const std::size_t hn = h.order(), gn = g.order();
    for (Vertex t = 0; t < gn; ++t) {
      VertexSet non = g.vertices() - g.neighbors(t);
      non.erase(t);
      non_neighbors_.push_back(non);
    }
    for (Vertex p = 0; p < hn; ++p) {
      VertexSet c;
      for (Vertex t = 0; t < gn; ++t)
        if (g.degree(t) >= h.degree(p) && gn - 1 - g.degree(t) >= hn - 1 - h.degree(p)) c.insert(t);
      static_candidates_.push_back(c);
    }
    // Least degree first, then the vertex with most placed neighbours.
    VertexSet placed;
    std::vector<std::size_t> placed_neighbors(hn, 0);
    while (order_.size() < hn) {
      Vertex best = hn;
      for (Vertex p = 0; p < hn; ++p) {
        if (placed.contains(p)) continue;
        if (best == hn || placed_neighbors[p] > placed_neighbors[best] ||
            (placed_neighbors[p] == placed_neighbors[best] && h.degree(p) < h.degree(best)))
          best = p;
      }
      order_.push_back(best);
      placed.insert(best);
      for (Vertex q : h.neighbors(best)) ++placed_neighbors[q];
    }
    map_.assign(hn, 0);
  }

  SearchResult<EmbeddingMap> run() {
    if (h_.order() > g_.order()) return SearchResult<EmbeddingMap>::none();
    if (extend(0, VertexSet{})) return SearchResult<EmbeddingMap>::found(map_, budget_.used());
    if (budget_.exhausted()) return SearchResult<EmbeddingMap>::inconclusive(budget_.used());
    return SearchResult<EmbeddingMap>::none(budget_.used());
  }

 private:
  bool extend(std::size_t depth, const VertexSet& used) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    VertexSet c = static_candidates_[p] - used;
    for (std::size_t i = 0; i < depth && !c.empty(); ++i) {
      const Vertex q = order_[i];
      c &= h_.adjacent(p, q) ? g_.neighbors(map_[q]) : non_neighbors_[map_[q]];
    }
    for (Vertex t : c) {
      if (!budget_.spend()) return false;
      map_[p] = t;
      VertexSet next = used;
      next.insert(t);
      if (extend(depth + 1, next)) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  NodeBudget budget_;
  std::vector<VertexSet> non_neighbors_;
  std::vector<VertexSet> static_candidates_;
  std::vector<Vertex> order_;
  EmbeddingMap map_;
};

void clique_search(const Graph& g, const VertexSet& clique, VertexSet p, VertexSet& best) {
  if (p.empty()) {
    if (clique.size() > best.size()) best = clique;
    return;
  }
  // Greedy colouring of p bounds the clique size reachable from each vertex.
  std::vector<std::pair<Vertex, std::size_t>> coloured;
  VertexSet uncoloured = p;
  for (std::size_t colour = 1; !uncoloured.empty(); ++colour) {
    VertexSet q = uncoloured;
    while (!q.empty()) {
      Vertex v = q.front();
      q -= g.neighbors(v);
      q.erase(v);
      uncoloured.erase(v);
      coloured.emplace_back(v, colour);
    }
  }
  const std::size_t size = clique.size();
  for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
    if (size + it->second <= best.size()) return;
    VertexSet next = clique;
    next.insert(it->first);
    clique_search(g, next, p & g.neighbors(it->first), best);
    p.erase(it->first);
  }
}

}  // namespace

SearchResult<EmbeddingMap> induced_embedding(const Graph& h, const Graph& g, std::uint64_t max_nodes) {
  auto result = Embedder(h, g, max_nodes).run();
  if (result.is_found() && !verify_embedding(h, g, *result.value))
    throw std::logic_error("induced_embedding produced an invalid map");
  return result;
}

PrefixResult largest_family_prefix(const Graph& g, const FamilySpec& family, std::size_t k_max,
                                   std::uint64_t max_nodes) {
  PrefixResult out;
  std::size_t lo = 0;
  std::size_t hi = std::min(k_max, (VertexSet::capacity - 2) / 2);
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    FamilySpec spec = family;
    spec.n = mid;
    const Graph pattern = gen_graph(spec);
    auto r = pattern.order() > g.order() ? SearchResult<EmbeddingMap>::none()
                                         : induced_embedding(pattern, g, max_nodes);
    if (r.is_found()) {
      lo = mid;
      out.map = *r.value;
    } else {
      if (r.is_inconclusive()) out.status = SearchStatus::inconclusive;
      hi = mid - 1;
    }
  }
  out.m = lo;
  return out;
}

VertexSet maximum_clique(const Graph& g) {
  VertexSet best;
  clique_search(g, VertexSet{}, g.vertices(), best);
  return best;
}

ExtremalSets extremal_sets(const Graph& g) {
  ExtremalSets out{maximum_clique(g), maximum_clique(complement(g))};
  for (Vertex u : out.clique)
    for (Vertex v : out.clique)
      if (u < v && !g.adjacent(u, v)) throw std::logic_error("extremal_sets: clique certificate failed");
  for (Vertex u : out.independent)
    for (Vertex v : out.independent)
      if (u < v && g.adjacent(u, v)) throw std::logic_error("extremal_sets: independent set certificate failed");
  return out;
}

namespace {

// Isomorphism classes of induced subgraphs of g with 1..size_max vertices,
// ordered by size and then canonical code.
std::vector<Graph> induced_classes(const Graph& g, std::size_t size_max) {
  std::map<std::pair<std::size_t, std::uint64_t>, bool> seen;
  std::vector<Vertex> chosen;
  auto visit = [&](auto&& self, Vertex start) -> void {
    if (!chosen.empty()) seen[{chosen.size(), canonical_code(induced(g, VertexSet::from(chosen)))}] = true;
    if (chosen.size() == size_max) return;
    for (Vertex v = start; v < g.order(); ++v) {
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  std::vector<Graph> out;
  for (const auto& [key, unused] : seen) out.push_back(graph_from_code(key.first, key.second));
  return out;
}

}  // namespace

Separation separating_witness(const FamilySpec& fam_a, const FamilySpec& fam_b, const SeparationOptions& options) {
  FamilySpec a = fam_a;
  a.n = options.n_probe;
  const Graph host = gen_graph(a);
  std::vector<Graph> targets;
  for (std::size_t m = 1; m <= options.probe_bound; ++m) {
    FamilySpec b = fam_b;
    b.n = m;
    targets.push_back(gen_graph(b));
  }

  Separation out;
  out.caveat = "non-embedding checked against " + family_name(fam_b.family) + " truncations n <= " +
               std::to_string(options.probe_bound) + " only; finite evidence, not a proof";
  bool undecided = false;
  for (const Graph& h : induced_classes(host, options.size_max)) {
    bool separates = true;
    for (auto it = targets.rbegin(); it != targets.rend() && separates; ++it) {
      auto r = induced_embedding(h, *it);
      if (r.is_found()) separates = false;
      if (r.is_inconclusive()) {
        undecided = true;
        separates = false;
      }
    }
    if (!separates) continue;
    out.status = SearchStatus::found;
    out.witness = h;
    out.into_a = *induced_embedding(h, host).value;
    return out;
  }
  out.status = undecided ? SearchStatus::inconclusive : SearchStatus::none;
  return out;
}

}  // namespace primegraph
