#include "primegraph/extract.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "primegraph/lattice.hpp"
#include "primegraph/modular.hpp"

namespace primegraph {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPositionPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_slot(BlockPosition a, BlockPosition b) {
  int x = static_cast<int>(a), y = static_cast<int>(b);
  if (x > y) std::swap(x, y);
  for (int k = 0; k < 6; ++k)
    if (kPositionPairs[k] == std::pair{x, y}) return k;
  throw std::invalid_argument("block positions must differ");
}

using Admissible = std::function<bool(std::uint32_t)>;

bool accepts(const Admissible& admissible, std::uint32_t block) { return !admissible || admissible(block); }

Homogeneous exact_homogeneous(const std::vector<std::vector<std::uint32_t>>& colour, const Admissible& admissible) {
  const std::size_t len = colour.size();
  std::map<std::uint32_t, Graph> by_colour;
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t m = n + 1; m < len; ++m) {
      const std::uint32_t c = colour[n][m];
      if (!accepts(admissible, c)) continue;
      auto it = by_colour.try_emplace(c, Graph(len)).first;
      it->second.add_edge(n, m);
    }
  Homogeneous out;
  for (const auto& [c, graph] : by_colour) {
    VertexSet clique = maximum_clique(graph);
    if (clique.size() >= 2 && clique.size() > out.indices.size()) {
      out.indices = clique.members();
      out.block = c;
    }
  }
  if (out.indices.empty() && len > 0) out.indices = {0};
  return out;
}

Homogeneous greedy_homogeneous(const std::vector<std::vector<std::uint32_t>>& colour, const Admissible& admissible) {
  std::vector<std::size_t> remaining(colour.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::vector<std::pair<std::size_t, std::optional<std::uint32_t>>> pivots;
  while (!remaining.empty()) {
    const std::size_t p = remaining.front();
    std::map<std::uint32_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      const std::uint32_t c = colour[p][remaining[i]];
      if (accepts(admissible, c)) classes[c].push_back(remaining[i]);
    }
    if (classes.empty()) {
      if (remaining.size() == 1) pivots.emplace_back(p, std::nullopt);
      remaining.erase(remaining.begin());
      continue;
    }
    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it)
      if (it->second.size() > best->second.size()) best = it;
    pivots.emplace_back(p, best->first);
    remaining = best->second;
  }
  std::map<std::uint32_t, std::size_t> frequency;
  for (const auto& [p, c] : pivots)
    if (c) ++frequency[*c];
  Homogeneous out;
  if (frequency.empty()) {
    if (!pivots.empty()) out.indices = {pivots.back().first};
    return out;
  }
  auto top = frequency.begin();
  for (auto it = frequency.begin(); it != frequency.end(); ++it)
    if (it->second > top->second) top = it;
  out.block = top->first;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i].second == top->first || i + 1 == pivots.size()) out.indices.push_back(pivots[i].first);
  return out;
}

}  // namespace

PairSequences chain_to_pair_sequences(const Graph& g, const std::vector<VertexSet>& chain) {
  if (chain.size() < 2) throw std::invalid_argument("chain_to_pair_sequences: chain needs at least two elements");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].is_subset_of(g.vertices()))
      throw std::invalid_argument("chain_to_pair_sequences: element out of range");
    if (plus_operator(g, plus_operator(g, chain[i])) != chain[i])
      throw std::invalid_argument("chain_to_pair_sequences: element " + std::to_string(i) +
                                  " is not in the neighbourhood lattice");
    if (i > 0 && !chain[i - 1].is_proper_subset_of(chain[i]))
      throw std::invalid_argument("chain_to_pair_sequences: chain is not strictly increasing at " + std::to_string(i));
  }

  PairSequences out;
  out.chain = chain;
  for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
    const VertexSet plus = plus_operator(g, chain[n]);
    std::optional<Edge> pick, fallback;
    for (Vertex a : chain[n + 1]) {
      for (Vertex b : plus) {
        if (a == b) {
          if (!fallback) fallback = Edge{a, b};
        } else if (!g.adjacent(a, b)) {
          pick = Edge{a, b};
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) pick = fallback;
    if (!pick) throw std::logic_error("chain_to_pair_sequences: no separating pair at step " + std::to_string(n));
    out.f0.push_back(pick->first);
    out.f1.push_back(pick->second);
  }

  for (std::size_t n = 0; n < out.size(); ++n)
    for (std::size_t m = n + 1; m < out.size(); ++m) {
      if (!g.adjacent(out.f0[n], out.f1[m]) || out.f0[n] == out.f0[m] || out.f1[n] == out.f1[m])
        throw std::logic_error("chain_to_pair_sequences: sequence properties violated");
    }
  return out;
}

std::uint32_t pair_block(const Graph& g, const std::vector<Vertex>& f0, const std::vector<Vertex>& f1, std::size_t n,
                         std::size_t m) {
  const std::array<Vertex, 4> at{f0[n], f1[n], f0[m], f1[m]};
  std::uint32_t block = 0;
  for (int k = 0; k < 6; ++k) {
    const Vertex u = at[kPositionPairs[k].first];
    const Vertex v = at[kPositionPairs[k].second];
    if (u == v) block |= 1u << (2 * k);
    if (u != v && g.adjacent(u, v)) block |= 1u << (2 * k + 1);
  }
  return block;
}

bool block_equal(std::uint32_t block, BlockPosition a, BlockPosition b) {
  return (block >> (2 * pair_slot(a, b))) & 1u;
}

bool block_adjacent(std::uint32_t block, BlockPosition a, BlockPosition b) {
  return (block >> (2 * pair_slot(a, b) + 1)) & 1u;
}

Homogeneous homogenize(const Graph& g, const std::vector<Vertex>& f0, const std::vector<Vertex>& f1,
                       HomogenizeMode mode, const std::function<bool(std::uint32_t)>& admissible) {
  if (f0.size() != f1.size()) throw std::invalid_argument("homogenize: sequences differ in length");
  const std::size_t len = f0.size();
  std::vector<std::vector<std::uint32_t>> colour(len, std::vector<std::uint32_t>(len, 0));
  std::vector<std::uint32_t> seen;
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t m = n + 1; m < len; ++m) {
      colour[n][m] = pair_block(g, f0, f1, n, m);
      seen.push_back(colour[n][m]);
    }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

  const bool exact = mode == HomogenizeMode::exact || (mode == HomogenizeMode::automatic && len <= 40);
  Homogeneous out = exact && len <= 40 ? exact_homogeneous(colour, admissible) : greedy_homogeneous(colour, admissible);
  out.occupied_blocks = seen.size();
  for (std::size_t i = 0; i < out.indices.size(); ++i)
    for (std::size_t j = i + 1; j < out.indices.size(); ++j)
      if (colour[out.indices[i]][out.indices[j]] != *out.block)
        throw std::logic_error("homogenize: returned indices are not uniform");
  return out;
}

Homogeneous homogenize(const Graph& g, const PairSequences& seqs, HomogenizeMode mode,
                       const std::function<bool(std::uint32_t)>& admissible) {
  return homogenize(g, seqs.f0, seqs.f1, mode, admissible);
}

std::string to_string(ExtractionKind kind) {
  switch (kind) {
    case ExtractionKind::g0_prefix:
      return "G0_PREFIX";
    case ExtractionKind::g1_prefix:
      return "G1_PREFIX";
    case ExtractionKind::g2_prefix:
      return "G2_PREFIX";
    case ExtractionKind::g3_prefix:
      return "G3_PREFIX";
    case ExtractionKind::failed_below_threshold:
      return "FAILED_BELOW_THRESHOLD";
  }
  return "UNKNOWN";
}

Family extraction_family(ExtractionKind kind) {
  switch (kind) {
    case ExtractionKind::g0_prefix:
      return Family::g0;
    case ExtractionKind::g1_prefix:
      return Family::g1;
    case ExtractionKind::g2_prefix:
      return Family::g2;
    case ExtractionKind::g3_prefix:
      return Family::g3;
    default:
      throw std::invalid_argument("failed extraction has no family");
  }
}

namespace {

void check_witness(const Graph& g, const ExtractionResult& r) {
  if (r.kind == ExtractionKind::failed_below_threshold) return;
  const Graph pattern = gen_graph(FamilySpec{extraction_family(r.kind), r.m});
  if (!verify_embedding(pattern, g, r.witness)) throw std::logic_error("extraction witness failed re-verification");
}

using BP = BlockPosition;

bool no_equalities(std::uint32_t block) {
  for (int k = 0; k < 6; ++k)
    if ((block >> (2 * k)) & 1u) return false;
  return true;
}

bool clique_side(std::uint32_t block) {
  return block_adjacent(block, BP::f0_n, BP::f0_m) || block_adjacent(block, BP::f1_n, BP::f1_m);
}

}  // namespace

ExtractionResult extract_g0_or_g1(const Graph& g, HomogenizeMode mode) {
  ExtractionResult out;
  const Lattice lattice = neighborhood_lattice(g);
  std::vector<VertexSet> chain;
  for (std::size_t i : longest_chain(lattice)) chain.push_back(lattice.elements[i]);
  out.chain_length = chain.size();
  if (chain.size() < 2) {
    out.note = "neighbourhood lattice chain too short";
    return out;
  }

  const PairSequences seqs = chain_to_pair_sequences(g, chain);
  const Homogeneous h = homogenize(g, seqs, mode, [](std::uint32_t b) { return no_equalities(b) && !clique_side(b); });
  out.occupied_blocks = h.occupied_blocks;

  if (h.block && h.indices.size() >= 2) {
    const std::size_t t = h.indices.size();
    std::vector<Vertex> a, b;
    for (std::size_t i : h.indices) {
      a.push_back(seqs.f0[i]);
      b.push_back(seqs.f1[i]);
    }
    if (block_adjacent(*h.block, BP::f1_n, BP::f0_m)) {
      out.kind = ExtractionKind::g0_prefix;
      out.m = t;
      out.witness = a;
      out.witness.insert(out.witness.end(), b.begin(), b.end());
    } else {
      out.kind = ExtractionKind::g1_prefix;
      out.m = t - 1;
      out.witness.assign(a.begin(), a.end() - 1);
      out.witness.insert(out.witness.end(), b.begin() + 1, b.end());
    }
  }

  if (out.m < 2) {
    out.kind = ExtractionKind::failed_below_threshold;
    out.witness.clear();
    out.note = "uniform prefix below size 2";
    const Homogeneous any = homogenize(g, seqs, mode, no_equalities);
    if (any.block && clique_side(*any.block) && any.indices.size() > h.indices.size()) {
      VertexSet clique;
      const bool side0 = block_adjacent(*any.block, BP::f0_n, BP::f0_m);
      for (std::size_t i : any.indices) clique.insert(side0 ? seqs.f0[i] : seqs.f1[i]);
      out.clique = clique;
      out.note = "only clique-side uniform blocks are large";
    }
    out.m = 0;
    return out;
  }
  check_witness(g, out);
  return out;
}

std::vector<Vertex> longest_induced_path(const Graph& g, const VertexSet& within, std::uint64_t max_nodes) {
  NodeBudget budget(max_nodes);
  std::vector<Vertex> best, path;
  const std::size_t target = within.size();
  auto dfs = [&](auto&& self, const VertexSet& blocked) -> void {
    if (path.size() > best.size()) best = path;
    if (best.size() == target || budget.exhausted()) return;
    const Vertex last = path.back();
    VertexSet next_blocked = blocked | g.neighbors(last);
    next_blocked.insert(last);
    for (Vertex v : (g.neighbors(last) & within) - blocked) {
      if (!budget.spend()) return;
      path.push_back(v);
      self(self, next_blocked);
      path.pop_back();
      if (best.size() == target || budget.exhausted()) return;
    }
  };
  for (Vertex s : within) {
    path = {s};
    dfs(dfs, VertexSet{});
    if (best.size() == target || budget.exhausted()) break;
  }
  return best;
}

namespace {

struct SparseCandidate {
  std::size_t m = 0;
  ExtractionKind kind = ExtractionKind::failed_below_threshold;
  EmbeddingMap witness;
  std::size_t occupied_blocks = 0;
};

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& part) {
  const std::vector<Vertex> labels = part.members();
  std::vector<VertexSet> out;
  for (const VertexSet& c : connected_components(induced(g, part))) {
    VertexSet mapped;
    for (Vertex v : c) mapped.insert(labels[v]);
    out.push_back(mapped);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

// G3 prefix: components of g[X^+] give pairs a_C in C, b_C adjacent to a_C
// outside X^+ and X, and not adjacent to the apex c.
SparseCandidate sparse_g3(const Graph& g, const VertexSet& x, const VertexSet& plus,
                          const std::vector<VertexSet>& components, HomogenizeMode mode) {
  SparseCandidate best;
  const VertexSet outside = g.vertices() - plus - x;
  std::size_t skipped = 0;
  for (const VertexSet& comp : components) {
    bool has_pair = false;
    for (Vertex a : comp) has_pair = has_pair || g.neighbors(a).intersects(outside);
    if (!has_pair) ++skipped;
  }
  if (skipped > 1)
    throw std::logic_error("extract_g2_or_g3: two components without an outside neighbour contradict primality");

  for (Vertex c : x) {
    std::vector<Vertex> f0, f1;
    VertexSet used;
    for (const VertexSet& comp : components) {
      if (comp.intersects(used)) continue;
      std::optional<Edge> pair;
      for (Vertex a : comp) {
        const VertexSet bs = (g.neighbors(a) & outside) - g.neighbors(c);
        if (!bs.empty()) {
          pair = Edge{a, bs.front()};
          break;
        }
      }
      if (!pair) continue;
      f0.push_back(pair->first);
      f1.push_back(pair->second);
      used |= g.neighbors(pair->second);
    }
    if (f0.empty()) continue;
    const Homogeneous h = homogenize(g, f0, f1, mode, [](std::uint32_t b) {
      // Only f0(n) ~ f1(n) and f0(m) ~ f1(m).
      return b == ((1u << 1) | (1u << 11));
    });
    const std::size_t m = h.indices.size();
    if (m <= best.m) continue;
    best.m = m;
    best.kind = ExtractionKind::g3_prefix;
    best.occupied_blocks = h.occupied_blocks;
    best.witness.assign(2 * m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      best.witness[i] = f1[h.indices[i]];
      best.witness[m + i] = f0[h.indices[i]];
    }
    best.witness[2 * m] = c;
  }
  return best;
}

}  // namespace

ExtractionResult extract_g2_or_g3(const Graph& g, std::size_t s_threshold, HomogenizeMode mode) {
  if (!is_prime_graph(g).prime) throw std::invalid_argument("extract_g2_or_g3 requires a prime graph");
  const Lattice lattice = neighborhood_lattice(g);
  const std::size_t size = lattice.size();
  std::vector<std::size_t> up(size);
  for (std::size_t i = 0; i < size; ++i) up[i] = lattice.up_set_size(i);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < size; ++i) {
    if (up[i] < s_threshold) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < size && maximal; ++j)
      if (j != i && up[j] >= s_threshold && lattice.elements[i].is_proper_subset_of(lattice.elements[j]))
        maximal = false;
    if (maximal) candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](auto a, auto b) { return up[a] > up[b]; });
  // The least element is the empty set.
  if (std::find(candidates.begin(), candidates.end(), std::size_t{0}) == candidates.end()) candidates.push_back(0);

  ExtractionResult out;
  for (std::size_t idx : candidates) {
    const VertexSet& x = lattice.elements[idx];
    const VertexSet plus = plus_operator(g, x);
    const auto components = components_within(g, plus);

    SparseCandidate found;
    for (const VertexSet& comp : components) {
      if (comp.size() <= s_threshold) continue;
      const std::vector<Vertex> path = longest_induced_path(g, comp);
      const std::size_t m = path.size() / 2;
      if (m > found.m) {
        found.m = m;
        found.kind = ExtractionKind::g2_prefix;
        found.witness.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(2 * m));
      }
    }
    if (!x.empty()) {
      SparseCandidate g3 = sparse_g3(g, x, plus, components, mode);
      if (g3.m > found.m) found = std::move(g3);
    }
    if (found.m > out.m) {
      out.kind = found.kind;
      out.m = found.m;
      out.witness = found.witness;
      out.occupied_blocks = found.occupied_blocks;
      out.anchor = x;
      out.chain_length = up[idx];
    }
  }

  if (out.m < 2) {
    out = ExtractionResult{};
    out.note = "no G2 or G3 prefix of size 2";
    return out;
  }
  check_witness(g, out);
  return out;
}

}  // namespace primegraph
