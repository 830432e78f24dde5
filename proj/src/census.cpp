#include "primegraph/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "primegraph/modular.hpp"
#include "primegraph/search.hpp"

namespace primegraph {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), bits_(pair_count(g.order())) {
    by_degree_.resize(n_);
    std::iota(by_degree_.begin(), by_degree_.end(), Vertex{0});
    std::stable_sort(by_degree_.begin(), by_degree_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    label_.assign(n_, 0);
  }

  std::pair<std::uint64_t, std::vector<Vertex>> run() {
    if (n_ <= 1) {
      best_labels_ = by_degree_;
      return {0, best_labels_};
    }
    search(0, 0, VertexSet{});
    return {best_, best_labels_};
  }

 private:
  std::uint64_t bit(std::size_t pos) const { return std::uint64_t{1} << (bits_ - 1 - pos); }

  // Mask of the positions fixed once labels 0..k are placed.
  std::uint64_t prefix_mask(std::size_t k) const {
    std::size_t fixed = pair_count(k + 1);
    if (fixed == 0) return 0;
    std::uint64_t ones = fixed >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << fixed) - 1);
    return ones << (bits_ - fixed);
  }

  void search(std::size_t k, std::uint64_t code, VertexSet used) {
    if (k == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        have_best_ = true;
        best_labels_ = label_;
      }
      return;
    }
    const std::size_t want = g_.degree(by_degree_[k]);
    const std::uint64_t mask = prefix_mask(k);
    for (Vertex v : by_degree_) {
      if (used.contains(v) || g_.degree(v) != want) continue;
      std::uint64_t next = code;
      for (std::size_t i = 0; i < k; ++i)
        if (g_.adjacent(label_[i], v)) next |= bit(pair_count(k) + i);
      if (have_best_ && (next & mask) > (best_ & mask)) continue;
      label_[k] = v;
      VertexSet u = used;
      u.insert(v);
      search(k + 1, next, u);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t bits_;
  std::vector<Vertex> by_degree_;
  std::vector<Vertex> label_;
  std::vector<Vertex> best_labels_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void check_canonical_order(std::size_t n) {
  if (n > kMaxCanonicalOrder)
    throw GuardExceeded("canonical forms are limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_canonical_order(g.order());
  return Canonizer(g).run().first;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  check_canonical_order(n);
  Graph g(n);
  const std::size_t bits = pair_count(n);
  for (Vertex k = 1; k < n; ++k)
    for (Vertex i = 0; i < k; ++i)
      if ((code >> (bits - 1 - (pair_count(k) + i))) & 1u) g.add_edge(i, k);
  return g;
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

std::vector<Graph> enumerate_graphs(std::size_t n, GraphFilter filter) {
  if (n > 8) throw GuardExceeded("enumerate_graphs is limited to 8 vertices");
  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 1; m <= n; ++m) {
    // Attach vertex m-1 to every subset of the previous representatives.
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(m - 1, code);
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (m - 1)); ++subset) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex u = 0; u + 1 < m; ++u)
          if ((subset >> u) & 1u) g.add_edge(u, m - 1);
        next.push_back(canonical_code(g));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (filter == GraphFilter::bipartite && !is_bipartite(g)) continue;
    if (filter == GraphFilter::prime && !is_prime_graph(g).prime) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n > 7) throw GuardExceeded("enumerate_posets is limited to 7 elements");
  // Each level holds the down-sets of elements 0..m-1.
  std::vector<std::vector<VertexSet>> level{{}};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<std::vector<VertexSet>> next;
    for (const auto& downs : level) {
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        VertexSet d;
        for (Vertex u = 0; u < m; ++u)
          if ((subset >> u) & 1u) d.insert(u);
        bool closed = true;
        for (Vertex u : d) closed = closed && downs[u].is_subset_of(d);
        if (!closed) continue;
        auto extended = downs;
        extended.push_back(d);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  std::vector<Poset> out;
  out.reserve(level.size());
  for (const auto& downs : level) {
    std::vector<VertexSet> up(n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : downs[v]) up[u].insert(v);
    out.push_back(Poset::from_up_sets(std::move(up)));
  }
  return out;
}

}  // namespace primegraph
