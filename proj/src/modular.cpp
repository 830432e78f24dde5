#include "primegraph/modular.hpp"

#include <stdexcept>

namespace primegraph {

namespace {

VertexSet graph_separators(const Graph& g, const VertexSet& a) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (a.contains(v)) continue;
    const VertexSet& nv = g.neighbors(v);
    if (nv.intersects(a) && !a.is_subset_of(nv)) out.insert(v);
  }
  return out;
}

VertexSet poset_separators(const Poset& p, const VertexSet& a) {
  VertexSet out;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (a.contains(v)) continue;
    const VertexSet& up = p.above(v);
    const VertexSet& down = p.below(v);
    if ((up.intersects(a) && !a.is_subset_of(up)) || (down.intersects(a) && !a.is_subset_of(down))) out.insert(v);
  }
  return out;
}

template <class Separators>
VertexSet close(VertexSet a, Separators&& separators) {
  while (true) {
    VertexSet s = separators(a);
    if (s.empty()) return a;
    a |= s;
  }
}

template <class Closure>
PrimalityReport primality(std::size_t n, Closure&& closure) {
  PrimalityReport report;
  report.trivial_size = n <= 3;
  if (n <= 2) {
    report.indecomposable = true;
    return report;
  }
  const VertexSet all = VertexSet::range(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet c = closure(VertexSet{u, v});
      if (c != all && (!report.witness || c.size() < report.witness->size())) report.witness = c;
    }
  }
  report.indecomposable = !report.witness.has_value();
  report.prime = report.indecomposable && n > 3;
  return report;
}

}  // namespace

bool is_autonomous(const Graph& g, const VertexSet& a) { return graph_separators(g, a).empty(); }

VertexSet autonomous_closure(const Graph& g, const VertexSet& seed) {
  if (!seed.is_subset_of(g.vertices())) throw std::out_of_range("autonomous_closure: seed out of range");
  return close(seed, [&](const VertexSet& a) { return graph_separators(g, a); });
}

PrimalityReport is_prime_graph(const Graph& g) {
  return primality(g.order(), [&](const VertexSet& seed) { return autonomous_closure(g, seed); });
}

bool is_point_determining(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) return false;
  return true;
}

PointDeterminingQuotient point_determining_quotient(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> class_of(n, -1);
  PointDeterminingQuotient out;
  for (Vertex u = 0; u < n; ++u) {
    if (class_of[u] != -1) continue;
    VertexSet cls;
    for (Vertex v = u; v < n; ++v) {
      if (class_of[v] == -1 && g.neighbors(v) == g.neighbors(u)) {
        class_of[v] = static_cast<int>(out.classes.size());
        cls.insert(v);
      }
    }
    out.classes.push_back(cls);
  }
  out.quotient = Graph(out.classes.size());
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    Vertex rep = out.classes[i].front();
    for (Vertex w : g.neighbors(rep)) {
      auto j = static_cast<std::size_t>(class_of[w]);
      if (i < j) out.quotient.add_edge(i, j);
    }
  }
  return out;
}

bool is_autonomous(const Poset& p, const VertexSet& a) { return poset_separators(p, a).empty(); }

VertexSet autonomous_closure(const Poset& p, const VertexSet& seed) {
  if (!seed.is_subset_of(VertexSet::range(p.size()))) throw std::out_of_range("autonomous_closure: seed out of range");
  return close(seed, [&](const VertexSet& a) { return poset_separators(p, a); });
}

PrimalityReport is_prime_poset(const Poset& p) {
  return primality(p.size(), [&](const VertexSet& seed) { return autonomous_closure(p, seed); });
}

}  // namespace primegraph
