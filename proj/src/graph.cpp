#include "primegraph/graph.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace primegraph {

namespace {

void require_size(std::size_t n) {
  if (n > VertexSet::capacity)
    throw std::length_error("structure size " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(VertexSet::capacity));
}

}  // namespace

Graph::Graph(std::size_t n) {
  require_size(n);
  adjacency_.resize(n);
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (g.adjacent(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Poset::Poset(std::size_t n) {
  require_size(n);
  up_.resize(n);
  down_.resize(n);
}

Poset Poset::from_up_sets(std::vector<VertexSet> up) {
  require_size(up.size());
  const std::size_t n = up.size();
  const VertexSet all = VertexSet::range(n);
  for (Vertex u = 0; u < n; ++u) {
    if (!up[u].is_subset_of(all)) throw std::out_of_range("poset relation names an element out of range");
    if (up[u].contains(u)) throw std::invalid_argument("poset relation is reflexive at " + std::to_string(u));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : up[u]) {
      if (up[v].contains(u))
        throw std::invalid_argument("poset relation is not antisymmetric: " + std::to_string(u) + " and " +
                                    std::to_string(v));
      if (!up[v].is_subset_of(up[u]))
        throw std::invalid_argument("poset relation is not transitive at " + std::to_string(u) + " < " +
                                    std::to_string(v));
    }
  }
  Poset p;
  p.up_ = std::move(up);
  p.rebuild_down();
  return p;
}

Poset Poset::from_relation(std::size_t n, const std::vector<Edge>& less_than) {
  require_size(n);
  std::vector<VertexSet> up(n);
  for (auto [u, v] : less_than) {
    if (u >= n || v >= n) throw std::out_of_range("poset pair out of range");
    up[u].insert(v);
  }
  return from_up_sets(std::move(up));
}

Poset Poset::closure_of(std::size_t n, const std::vector<Edge>& generators) {
  require_size(n);
  std::vector<VertexSet> up(n);
  for (auto [u, v] : generators) {
    if (u >= n || v >= n) throw std::out_of_range("poset pair out of range");
    up[u].insert(v);
  }
  // Warshall on bitset rows.
  for (Vertex k = 0; k < n; ++k)
    for (Vertex u = 0; u < n; ++u)
      if (up[u].contains(k)) up[u] |= up[k];
  for (Vertex u = 0; u < n; ++u)
    if (up[u].contains(u)) throw std::invalid_argument("generating pairs contain a cycle");
  return from_up_sets(std::move(up));
}

void Poset::rebuild_down() {
  down_.assign(up_.size(), VertexSet{});
  for (Vertex u = 0; u < up_.size(); ++u)
    for (Vertex v : up_[u]) down_[v].insert(u);
}

std::vector<Edge> Poset::relation() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : up_[u]) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> Poset::covers() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : up_[u])
      if ((up_[u] & down_[v]).empty()) out.emplace_back(u, v);
  return out;
}

IncidenceStructure::IncidenceStructure(std::size_t e_size, std::size_t f_size) : f_size_(f_size) {
  require_size(e_size);
  require_size(f_size);
  rows_.resize(e_size);
}

void IncidenceStructure::relate(Vertex x, Vertex y, bool value) {
  if (x >= e_size() || y >= f_size_) throw std::out_of_range("incidence pair out of range");
  rows_[x].set(y, value);
}

VertexSet IncidenceStructure::column(Vertex y) const {
  VertexSet col;
  for (Vertex x = 0; x < e_size(); ++x)
    if (rows_[x].contains(y)) col.insert(x);
  return col;
}

IncidenceStructure IncidenceStructure::inverse() const {
  IncidenceStructure inv(f_size_, e_size());
  for (Vertex x = 0; x < e_size(); ++x)
    for (Vertex y : rows_[x]) inv.rows_[y].insert(x);
  return inv;
}

IncidenceStructure IncidenceStructure::negation() const {
  IncidenceStructure neg(e_size(), f_size_);
  const VertexSet all = VertexSet::range(f_size_);
  for (Vertex x = 0; x < e_size(); ++x) neg.rows_[x] = all - rows_[x];
  return neg;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced(const Graph& g, const VertexSet& a) {
  std::vector<Vertex> keep;
  for (Vertex v : a) {
    if (v >= g.order()) throw std::out_of_range("induced: vertex " + std::to_string(v) + " out of range");
    keep.push_back(v);
  }
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex x) {
  if (x >= g.order()) throw std::out_of_range("neighborhood: vertex " + std::to_string(x) + " out of range");
  return g.neighbors(x);
}

Graph comparability_graph(const Poset& p) {
  Graph g(p.size());
  for (auto [u, v] : p.relation()) g.add_edge(u, v);
  return g;
}

Graph incomparability_graph(const Poset& p) { return complement(comparability_graph(p)); }

Poset dual_poset(const Poset& p) {
  std::vector<VertexSet> up(p.size());
  for (Vertex u = 0; u < p.size(); ++u) up[u] = p.below(u);
  return Poset::from_up_sets(std::move(up));
}

IncidenceStructure graph_incidence(const Graph& g) {
  IncidenceStructure r(g.order(), g.order());
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y : g.neighbors(x)) r.relate(x, y);
  return r;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(unseen.front());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
    }
    unseen -= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g, VertexSet* side_zero) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  if (side_zero) {
    *side_zero = VertexSet{};
    for (Vertex v = 0; v < n; ++v)
      if (colour[v] == 0) side_zero->insert(v);
  }
  return true;
}

}  // namespace primegraph
