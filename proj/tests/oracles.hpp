#pragma once

// Brute-force reference implementations used only by the tests. Each works
// straight from the definitions over all subsets, permutations or
// orientations, so inputs must stay small.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "primegraph/graph.hpp"

namespace oracle {

using primegraph::Graph;
using primegraph::IncidenceStructure;
using primegraph::Poset;
using Mask = std::uint32_t;

inline Mask to_mask(const primegraph::VertexSet& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

inline primegraph::VertexSet from_mask(Mask m) {
  primegraph::VertexSet s;
  for (std::size_t v = 0; v < 32; ++v)
    if ((m >> v) & 1u) s.insert(v);
  return s;
}

inline bool autonomous(const Graph& g, Mask a) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    if ((a >> x) & 1u) continue;
    int seen = -1;
    for (std::size_t y = 0; y < n; ++y) {
      if (!((a >> y) & 1u)) continue;
      const int adj = g.adjacent(x, y) ? 1 : 0;
      if (seen != -1 && seen != adj) return false;
      seen = adj;
    }
  }
  return true;
}

inline bool prime(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4) return false;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask a = 1; a < full; ++a)
    if (std::popcount(a) >= 2 && autonomous(g, a)) return false;
  return true;
}

inline Mask autonomous_closure(const Graph& g, Mask seed) {
  const Mask full = (Mask{1} << g.order()) - 1;
  Mask best = full;
  for (Mask a = 0; a <= full; ++a)
    if ((a & seed) == seed && autonomous(g, a)) best &= a;
  return best;
}

inline bool poset_autonomous(const Poset& p, Mask a) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    if ((a >> x) & 1u) continue;
    int below = -1, above = -1;
    for (std::size_t y = 0; y < n; ++y) {
      if (!((a >> y) & 1u)) continue;
      const int b = p.less(x, y) ? 1 : 0, c = p.less(y, x) ? 1 : 0;
      if ((below != -1 && below != b) || (above != -1 && above != c)) return false;
      below = b;
      above = c;
    }
  }
  return true;
}

inline bool poset_prime(const Poset& p) {
  const std::size_t n = p.size();
  if (n < 4) return false;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask a = 1; a < full; ++a)
    if (std::popcount(a) >= 2 && poset_autonomous(p, a)) return false;
  return true;
}

inline Mask neighbours(const Graph& g, std::size_t v) {
  Mask m = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    if (g.adjacent(u, v)) m |= Mask{1} << u;
  return m;
}

// Intersections of every subfamily of neighbourhoods (the empty subfamily
// gives V).
inline std::set<Mask> neighbourhood_lattice(const Graph& g) {
  const std::size_t n = g.order();
  std::set<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    Mask x = (Mask{1} << n) - 1;
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1u) x &= neighbours(g, v);
    out.insert(x);
  }
  return out;
}

// Intersections of every subfamily of columns R^-1(y), as subsets of E.
inline std::set<Mask> galois_lattice(const IncidenceStructure& r) {
  std::set<Mask> out;
  for (Mask s = 0; s < (Mask{1} << r.f_size()); ++s) {
    Mask x = (Mask{1} << r.e_size()) - 1;
    for (std::size_t y = 0; y < r.f_size(); ++y) {
      if (!((s >> y) & 1u)) continue;
      Mask col = 0;
      for (std::size_t e = 0; e < r.e_size(); ++e)
        if (r.related(e, y)) col |= Mask{1} << e;
      x &= col;
    }
    out.insert(x);
  }
  return out;
}

// Number of elements of a longest chain of a family of subsets.
inline std::size_t longest_chain(const std::set<Mask>& family) {
  std::vector<Mask> v(family.begin(), family.end());
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::size_t> best(v.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (v[j] != v[i] && (v[j] & v[i]) == v[j]) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

inline bool ferrers(const IncidenceStructure& r) {
  for (std::size_t x = 0; x < r.e_size(); ++x)
    for (std::size_t x2 = 0; x2 < r.e_size(); ++x2)
      for (std::size_t y = 0; y < r.f_size(); ++y)
        for (std::size_t y2 = 0; y2 < r.f_size(); ++y2)
          if (r.related(x, y) && r.related(x2, y2) && !r.related(x, y2) && !r.related(x2, y)) return false;
  return true;
}

inline bool induced_embeds(const Graph& h, const Graph& g) {
  const std::size_t k = h.order(), n = g.order();
  if (k > n) return false;
  std::vector<std::size_t> map(k);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == k) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = h.adjacent(i, j) == g.adjacent(v, map[j]);
      if (!ok) continue;
      used[v] = true;
      map[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && induced_embeds(a, b);
}

inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    bool clique = true;
    for (std::size_t u = 0; u < g.order() && clique; ++u)
      for (std::size_t v = u + 1; v < g.order() && clique; ++v)
        if (((s >> u) & 1u) && ((s >> v) & 1u)) clique = g.adjacent(u, v);
    if (clique) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

// Orientations as sets of arcs (u, v) meaning u < v.
using Arcs = std::set<std::pair<std::size_t, std::size_t>>;

inline std::vector<Arcs> transitive_orientations(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Arcs> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()); ++m) {
    Arcs arcs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if ((m >> i) & 1u) std::swap(u, v);
      arcs.emplace(u, v);
    }
    bool transitive = true;
    for (const auto& [a, b] : arcs)
      for (const auto& [c, d] : arcs)
        if (b == c && !arcs.count({a, d})) transitive = false;
    if (transitive) out.push_back(arcs);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j) ok = !p.less(perm[j], perm[i]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Least k such that some k linear extensions intersect to p.
inline std::size_t dimension(const Poset& p) {
  const auto exts = linear_extensions(p);
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& e : exts) {
    std::vector<std::size_t> at(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) at[e[i]] = i;
    pos.push_back(at);
  }
  const std::size_t n = p.size();
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> pick(k, 0);
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t from) {
      if (i == k) {
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            if (u == v || p.less(u, v)) continue;
            bool all = true;
            for (std::size_t c : pick) all = all && pos[c][u] < pos[c][v];
            if (all) return false;
          }
        return true;
      }
      for (std::size_t c = from; c < pos.size(); ++c) {
        pick[i] = c;
        if (choose(i + 1, c + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0)) return k;
  }
}

// Isomorphism classes of graphs on n vertices, by least edge mask over all
// relabellings.
inline std::size_t graph_classes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = i;
    index[pairs[i].second][pairs[i].first] = i;
  }
  std::set<std::uint64_t> classes;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::uint64_t least = ~std::uint64_t{0};
    for (const auto& q : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((m >> i) & 1u) image |= std::uint64_t{1} << index[q[pairs[i].first]][q[pairs[i].second]];
      least = std::min(least, image);
    }
    classes.insert(least);
  }
  return classes.size();
}

}  // namespace oracle
