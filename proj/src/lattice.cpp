#include "primegraph/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace primegraph {

std::optional<std::size_t> Lattice::index_of(const VertexSet& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x, canonical_less);
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::size_t Lattice::up_set_size(std::size_t i) const {
  std::size_t count = 0;
  for (const auto& e : elements)
    if (elements[i].is_subset_of(e)) ++count;
  return count;
}

std::vector<std::size_t> Lattice::lower_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto [lo, hi] : covers)
    if (hi == i) out.push_back(lo);
  return out;
}

bool Lattice::is_chain() const {
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (!elements[i - 1].is_subset_of(elements[i])) return false;
  return true;
}

Lattice make_lattice(std::size_t universe_size, std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());

  Lattice l;
  l.universe_size = universe_size;
  l.elements = std::move(family);
  const auto& el = l.elements;
  // Lower covers of j are the maximal proper subsets of el[j]. Scanning in
  // decreasing canonical order meets larger sets first, so a candidate below an
  // accepted cover is never maximal.
  for (std::size_t j = 0; j < el.size(); ++j) {
    std::vector<std::size_t> accepted;
    for (std::size_t i = j; i-- > 0;) {
      if (el[i].size() == el[j].size() || !el[i].is_subset_of(el[j])) continue;
      bool dominated = false;
      for (std::size_t a : accepted)
        if (el[i].is_subset_of(el[a])) {
          dominated = true;
          break;
        }
      if (!dominated) accepted.push_back(i);
    }
    for (std::size_t a : accepted) l.covers.emplace_back(a, j);
  }
  std::sort(l.covers.begin(), l.covers.end());
  return l;
}

bool is_intersection_closed(const Lattice& l) {
  std::unordered_set<VertexSet, VertexSetHash> members(l.elements.begin(), l.elements.end());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (!members.count(l.elements[i] & l.elements[j])) return false;
  return true;
}

Lattice galois_lattice(const IncidenceStructure& r) {
  std::vector<VertexSet> family{VertexSet::range(r.e_size())};
  std::unordered_set<VertexSet, VertexSetHash> seen(family.begin(), family.end());
  for (Vertex y = 0; y < r.f_size(); ++y) {
    const VertexSet col = r.column(y);
    const std::size_t existing = family.size();
    for (std::size_t i = 0; i < existing; ++i) {
      VertexSet meet = family[i] & col;
      if (seen.insert(meet).second) family.push_back(meet);
    }
  }
  return make_lattice(r.e_size(), std::move(family));
}

Lattice neighborhood_lattice(const Graph& g) { return galois_lattice(graph_incidence(g)); }

VertexSet plus_operator(const Graph& g, const VertexSet& x) {
  VertexSet out = g.vertices();
  for (Vertex v : x) out &= neighborhood(g, v);
  return out;
}

std::optional<FerrersViolation> ferrers_violation(const IncidenceStructure& r) {
  // Ferrers iff the rows R(x) are totally ordered by inclusion.
  for (Vertex x = 0; x < r.e_size(); ++x) {
    for (Vertex x2 = x + 1; x2 < r.e_size(); ++x2) {
      const VertexSet& a = r.row(x);
      const VertexSet& b = r.row(x2);
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      return FerrersViolation{x, x2, (a - b).front(), (b - a).front()};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> longest_chain(const Lattice& l) {
  const std::size_t n = l.size();
  if (n == 0) return {};
  std::vector<std::size_t> best(n, 1);
  std::vector<std::size_t> prev(n, n);
  // covers are sorted by lower index and every lower index precedes its upper
  // in canonical order, so process uppers in increasing index.
  std::vector<std::vector<std::size_t>> lowers(n);
  for (auto [lo, hi] : l.covers) lowers[hi].push_back(lo);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i : lowers[j]) {
      if (best[i] + 1 > best[j] || (best[i] + 1 == best[j] && i < prev[j])) {
        best[j] = best[i] + 1;
        prev[j] = i;
      }
    }
  }
  std::size_t top = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (best[j] > best[top]) top = j;
  std::vector<std::size_t> chain;
  for (std::size_t j = top; j != n; j = prev[j]) chain.push_back(j);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

FiniteOrder FiniteOrder::dual() const {
  FiniteOrder d(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (le(i, j)) d.set_le(j, i);
  return d;
}

FiniteOrder inclusion_order(const Lattice& l) {
  FiniteOrder o(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j)
      if (l.elements[i].is_subset_of(l.elements[j])) o.set_le(i, j);
  return o;
}

namespace {

// Per-element rank profile: sizes of the down- and up-sets and the number of
// elements on the longest chains ending and starting at it.
struct Profile {
  std::size_t below = 0, above = 0, height = 0, depth = 0;
  auto key() const { return std::tie(below, above, height, depth); }
};

std::vector<Profile> profiles(const FiniteOrder& o) {
  const std::size_t n = o.size();
  std::vector<Profile> p(n);
  std::vector<std::size_t> by_below(n);
  for (std::size_t i = 0; i < n; ++i) {
    by_below[i] = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.le(j, i)) ++p[i].below;
      if (o.le(i, j)) ++p[i].above;
    }
  }
  // A strict predecessor always has a strictly smaller down-set.
  std::stable_sort(by_below.begin(), by_below.end(), [&](auto a, auto b) { return p[a].below < p[b].below; });
  for (std::size_t i : by_below) {
    p[i].height = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && o.le(j, i)) p[i].height = std::max(p[i].height, p[j].height + 1);
  }
  for (auto it = by_below.rbegin(); it != by_below.rend(); ++it) {
    std::size_t i = *it;
    p[i].depth = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && o.le(i, j)) p[i].depth = std::max(p[i].depth, p[j].depth + 1);
  }
  return p;
}

class OrderMatcher {
 public:
  OrderMatcher(const FiniteOrder& a, const FiniteOrder& b, bool bijective, std::uint64_t max_nodes)
      : a_(a), b_(b), bijective_(bijective), budget_(max_nodes), pa_(profiles(a)), pb_(profiles(b)) {
    order_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) {
      return std::tie(pa_[x].height, pa_[x].below) < std::tie(pa_[y].height, pa_[y].below);
    });
    candidates_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t c = 0; c < b.size(); ++c)
        if (compatible(pa_[i], pb_[c])) candidates_[i].push_back(c);
    phi_.assign(a.size(), b.size());
    used_.assign(b.size(), 0);
  }

  SearchResult<std::vector<std::size_t>> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return SearchResult<std::vector<std::size_t>>::none(budget_.used());
    bool ok = extend(0);
    if (ok) return SearchResult<std::vector<std::size_t>>::found(phi_, budget_.used());
    if (budget_.exhausted()) return SearchResult<std::vector<std::size_t>>::inconclusive(budget_.used());
    return SearchResult<std::vector<std::size_t>>::none(budget_.used());
  }

 private:
  bool compatible(const Profile& x, const Profile& y) const {
    if (bijective_) return x.key() == y.key();
    return x.below <= y.below && x.above <= y.above && x.height <= y.height && x.depth <= y.depth;
  }

  bool consistent(std::size_t pos, std::size_t i, std::size_t c) const {
    for (std::size_t q = 0; q < pos; ++q) {
      std::size_t k = order_[q];
      std::size_t fk = phi_[k];
      if (a_.le(k, i) != b_.le(fk, c) || a_.le(i, k) != b_.le(c, fk)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    std::size_t i = order_[pos];
    for (std::size_t c : candidates_[i]) {
      if (used_[c]) continue;
      if (!budget_.spend()) return false;
      if (!consistent(pos, i, c)) continue;
      phi_[i] = c;
      used_[c] = 1;
      if (extend(pos + 1)) return true;
      used_[c] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const FiniteOrder& a_;
  const FiniteOrder& b_;
  bool bijective_;
  NodeBudget budget_;
  std::vector<Profile> pa_, pb_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> phi_;
  std::vector<char> used_;
};

}  // namespace

SearchResult<std::vector<std::size_t>> find_order_isomorphism(const FiniteOrder& a, const FiniteOrder& b,
                                                               const SearchLimits& limits) {
  if (a.size() > limits.max_elements || b.size() > limits.max_elements)
    return SearchResult<std::vector<std::size_t>>::inconclusive();
  if (a.size() != b.size()) return SearchResult<std::vector<std::size_t>>::none();
  return OrderMatcher(a, b, true, limits.max_nodes).run();
}

SearchResult<std::vector<std::size_t>> find_order_embedding(const FiniteOrder& a, const FiniteOrder& b,
                                                             const SearchLimits& limits) {
  if (a.size() > limits.max_elements || b.size() > limits.max_elements)
    return SearchResult<std::vector<std::size_t>>::inconclusive();
  if (a.size() > b.size()) return SearchResult<std::vector<std::size_t>>::none();
  return OrderMatcher(a, b, false, limits.max_nodes).run();
}

SearchResult<std::vector<std::size_t>> is_self_dual(const Lattice& l, const SearchLimits& limits) {
  if (l.size() > limits.max_elements) return SearchResult<std::vector<std::size_t>>::inconclusive();
  FiniteOrder o = inclusion_order(l);
  return find_order_isomorphism(o, o.dual(), limits);
}

SearchResult<std::vector<std::size_t>> dual_galois_check(const IncidenceStructure& r, const SearchLimits& limits) {
  Lattice gal = galois_lattice(r);
  Lattice gal_inv = galois_lattice(r.inverse());
  if (gal.size() > limits.max_elements || gal_inv.size() > limits.max_elements)
    return SearchResult<std::vector<std::size_t>>::inconclusive();
  return find_order_isomorphism(inclusion_order(gal_inv), inclusion_order(gal).dual(), limits);
}

SearchResult<std::vector<std::size_t>> order_embeds(const Lattice& a, const Lattice& b, const SearchLimits& limits) {
  if (a.size() > limits.max_elements || b.size() > limits.max_elements)
    return SearchResult<std::vector<std::size_t>>::inconclusive();
  return find_order_embedding(inclusion_order(a), inclusion_order(b), limits);
}

bool verify_coding(const IncidenceStructure& small, const IncidenceStructure& big, const CodingWitness& w) {
  if (w.f.size() != small.e_size() || w.g.size() != small.f_size()) return false;
  for (Vertex fx : w.f)
    if (fx >= big.e_size()) return false;
  for (Vertex gy : w.g)
    if (gy >= big.f_size()) return false;
  for (Vertex x = 0; x < small.e_size(); ++x)
    for (Vertex y = 0; y < small.f_size(); ++y)
      if (small.related(x, y) != big.related(w.f[x], w.g[y])) return false;
  return true;
}

namespace {

class CodingSearch {
 public:
  CodingSearch(const IncidenceStructure& small, const IncidenceStructure& big, std::uint64_t max_nodes)
      : small_(small), big_(big), budget_(max_nodes), f_(small.e_size()) {
    const VertexSet all_f = VertexSet::range(big.f_size());
    for (Vertex x = 0; x < big.e_size(); ++x) neg_rows_.push_back(all_f - big.row(x));
  }

  SearchResult<CodingWitness> run() {
    // Column candidates: cand[y] = {y' : column y of small agrees with
    // column y' of big on every assigned row}.
    std::vector<VertexSet> cand(small_.f_size(), VertexSet::range(big_.f_size()));
    if (small_.e_size() > 0 && big_.e_size() == 0) return SearchResult<CodingWitness>::none();
    if (small_.f_size() > 0 && big_.f_size() == 0) return SearchResult<CodingWitness>::none();
    if (extend(0, cand)) return SearchResult<CodingWitness>::found(witness_, budget_.used());
    if (budget_.exhausted()) return SearchResult<CodingWitness>::inconclusive(budget_.used());
    return SearchResult<CodingWitness>::none(budget_.used());
  }

 private:
  bool extend(Vertex x, const std::vector<VertexSet>& cand) {
    if (x == small_.e_size()) {
      witness_.f = f_;
      witness_.g.clear();
      for (const auto& c : cand) witness_.g.push_back(c.front());
      return true;
    }
    for (Vertex fx = 0; fx < big_.e_size(); ++fx) {
      if (!budget_.spend()) return false;
      std::vector<VertexSet> next = cand;
      bool alive = true;
      for (Vertex y = 0; y < small_.f_size() && alive; ++y) {
        next[y] &= small_.related(x, y) ? big_.row(fx) : neg_rows_[fx];
        alive = !next[y].empty();
      }
      if (!alive) continue;
      f_[x] = fx;
      if (extend(x + 1, next)) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const IncidenceStructure& small_;
  const IncidenceStructure& big_;
  NodeBudget budget_;
  std::vector<VertexSet> neg_rows_;
  std::vector<Vertex> f_;
  CodingWitness witness_;
};

}  // namespace

SearchResult<CodingWitness> find_coding(const IncidenceStructure& small, const IncidenceStructure& big,
                                        std::uint64_t max_nodes) {
  auto result = CodingSearch(small, big, max_nodes).run();
  if (result.is_found() && !verify_coding(small, big, *result.value))
    throw std::logic_error("find_coding produced an invalid witness");
  return result;
}

}  // namespace primegraph
