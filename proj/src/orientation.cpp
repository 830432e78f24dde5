#include "primegraph/orientation.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "primegraph/search.hpp"

namespace primegraph {

namespace {

struct ArcState {
  std::vector<VertexSet> out, in;
};

class Orienter {
 public:
  Orienter(const Graph& g, std::size_t limit) : g_(g), limit_(limit) {}

  std::vector<Poset> run() {
    ArcState s{std::vector<VertexSet>(g_.order()), std::vector<VertexSet>(g_.order())};
    search(s);
    return std::move(found_);
  }

 private:
  bool done() const { return limit_ != 0 && found_.size() >= limit_; }

  // Adds u -> v and every arc it forces; false on contradiction.
  bool orient(ArcState& s, Vertex a, Vertex b) const {
    std::vector<Edge> queue{{a, b}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (s.out[u].contains(v)) continue;
      if (s.out[v].contains(u)) return false;
      s.out[u].insert(v);
      s.in[v].insert(u);
      // w ~ u, w !~ v forces u -> w; w ~ v, w !~ u forces w -> v.
      for (Vertex w : g_.neighbors(u) - g_.neighbors(v))
        if (w != v) queue.emplace_back(u, w);
      for (Vertex w : g_.neighbors(v) - g_.neighbors(u))
        if (w != u) queue.emplace_back(w, v);
      for (Vertex w : s.out[v]) {
        if (!g_.adjacent(u, w)) return false;
        queue.emplace_back(u, w);
      }
      for (Vertex w : s.in[u]) {
        if (!g_.adjacent(w, v)) return false;
        queue.emplace_back(w, v);
      }
    }
    return true;
  }

  void search(const ArcState& s) {
    if (done()) return;
    for (Vertex u = 0; u < g_.order(); ++u) {
      VertexSet open = g_.neighbors(u) - s.out[u] - s.in[u];
      Vertex v = open.next_after(u);
      if (v == VertexSet::capacity) continue;
      for (auto [x, y] : {Edge{u, v}, Edge{v, u}}) {
        ArcState next = s;
        if (orient(next, x, y)) search(next);
        if (done()) return;
      }
      return;
    }
    found_.push_back(Poset::from_up_sets(s.out));
  }

  const Graph& g_;
  std::size_t limit_;
  std::vector<Poset> found_;
};

void check_edges(const Graph& g, const OrientationOptions& options) {
  if (!options.force && g.edge_count() > options.max_edges)
    throw GuardExceeded("orientation search declines " + std::to_string(g.edge_count()) + " edges (limit " +
                        std::to_string(options.max_edges) + ")");
}

// Order closure of one linear extension under construction.
struct ClassState {
  std::vector<VertexSet> up, down;
};

class RealizerSearch {
 public:
  RealizerSearch(const Poset& p, std::size_t k) : p_(p), k_(k) {
    const std::size_t n = p.size();
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (a != b && !p.comparable(a, b) && p.below(a).is_subset_of(p.below(b)) &&
            p.above(b).is_subset_of(p.above(a)))
          pairs_.emplace_back(a, b);
    base_.up.resize(n);
    base_.down.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      base_.up[v] = p.above(v);
      base_.down[v] = p.below(v);
    }
  }

  std::optional<std::vector<ClassState>> run() {
    std::vector<ClassState> classes;
    if (extend(classes)) return classes;
    return std::nullopt;
  }

 private:
  // Critical pair (a, b) asks for b below a in some extension.
  static bool reversed(const ClassState& c, const Edge& pair) { return c.up[pair.second].contains(pair.first); }
  static bool feasible(const ClassState& c, const Edge& pair) { return !c.up[pair.first].contains(pair.second); }

  static void add(ClassState& c, Vertex a, Vertex b) {
    VertexSet low = c.down[b];
    low.insert(b);
    VertexSet high = c.up[a];
    high.insert(a);
    for (Vertex x : low) c.up[x] |= high;
    for (Vertex y : high) c.down[y] |= low;
  }

  bool extend(std::vector<ClassState>& classes) {
    // Pick the open pair with the fewest feasible classes; an unused class
    // counts once since all unused classes are interchangeable.
    std::size_t best = pairs_.size();
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      bool open = true;
      std::size_t count = 0;
      for (const auto& c : classes) {
        if (reversed(c, pairs_[i])) {
          open = false;
          break;
        }
        if (feasible(c, pairs_[i])) ++count;
      }
      if (!open) continue;
      if (classes.size() < k_) ++count;
      if (count < best_count) {
        best_count = count;
        best = i;
        if (count == 0) return false;
      }
    }
    if (best == pairs_.size()) return true;

    auto [a, b] = pairs_[best];
    for (std::size_t j = 0; j <= classes.size() && j < k_; ++j) {
      if (j == classes.size()) {
        classes.push_back(base_);
        add(classes.back(), a, b);
        if (extend(classes)) return true;
        classes.pop_back();
      } else if (feasible(classes[j], pairs_[best])) {
        ClassState saved = classes[j];
        add(classes[j], a, b);
        if (extend(classes)) return true;
        classes[j] = std::move(saved);
      }
    }
    return false;
  }

  const Poset& p_;
  std::size_t k_;
  std::vector<Edge> pairs_;
  ClassState base_;
};

std::vector<Vertex> linear_extension(const ClassState& c, std::size_t n) {
  std::vector<Vertex> order;
  VertexSet placed;
  while (order.size() < n) {
    for (Vertex v = 0; v < n; ++v) {
      if (!placed.contains(v) && c.down[v].is_subset_of(placed)) {
        order.push_back(v);
        placed.insert(v);
        break;
      }
    }
  }
  return order;
}

}  // namespace

OrientationSet transitive_orientations(const Graph& g, const OrientationOptions& options) {
  check_edges(g, options);
  return OrientationSet{g, Orienter(g, options.limit).run()};
}

std::optional<Poset> transitive_orientation(const Graph& g, const OrientationOptions& options) {
  check_edges(g, options);
  auto found = Orienter(g, 1).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool is_comparability(const Graph& g, const OrientationOptions& options) {
  return transitive_orientation(g, options).has_value();
}

std::vector<Poset> order_complements(const Poset& p, const OrientationOptions& options) {
  return transitive_orientations(incomparability_graph(p), options).orientations;
}

DimensionResult order_dimension(const Poset& p, const DimensionOptions& options) {
  if (options.k_max == 0 || options.k_max > 4)
    throw std::invalid_argument("order_dimension: k_max must lie in 1..4");
  if (p.size() > options.max_n)
    throw GuardExceeded("order_dimension declines " + std::to_string(p.size()) + " elements (limit " +
                        std::to_string(options.max_n) + ")");
  DimensionResult result;
  for (std::size_t k = 1; k <= options.k_max; ++k) {
    auto classes = RealizerSearch(p, k).run();
    if (!classes) continue;
    result.dimension = k;
    if (classes->empty()) {
      // No critical pair: p is a chain.
      ClassState c;
      for (Vertex v = 0; v < p.size(); ++v) c.down.push_back(p.below(v));
      result.realizer.push_back(linear_extension(c, p.size()));
    } else {
      for (const auto& c : *classes) result.realizer.push_back(linear_extension(c, p.size()));
    }
    if (!is_realizer(p, result.realizer)) throw std::logic_error("order_dimension produced an invalid realizer");
    return result;
  }
  return result;
}

bool is_realizer(const Poset& p, const std::vector<std::vector<Vertex>>& extensions) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& ext : extensions) {
    if (ext.size() != n) return false;
    std::vector<std::size_t> at(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ext[i] >= n || at[ext[i]] != n) return false;
      at[ext[i]] = i;
    }
    pos.push_back(std::move(at));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bool all_below = true;
      for (const auto& at : pos) all_below = all_below && at[u] < at[v];
      if (all_below != p.less(u, v)) return false;
    }
  return true;
}

}  // namespace primegraph
