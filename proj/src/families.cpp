#include "primegraph/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace primegraph {

namespace {

struct NameEntry {
  Family family;
  const char* name;
};

constexpr std::array<NameEntry, 17> kNames{{
    {Family::g0, "g0"},   {Family::g1, "g1"},   {Family::g2, "g2"},     {Family::g3, "g3"},
    {Family::g4, "g4"},   {Family::k, "k"},     {Family::gc, "gc"},     {Family::gab, "gab"},
    {Family::q0, "q0"},   {Family::q1, "q1"},   {Family::q2, "q2"},     {Family::q3, "q3"},
    {Family::p1, "p1"},   {Family::p2, "p2"},   {Family::pc, "pc"},     {Family::pab, "pab"},
    {Family::pab_split, "pab_split"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

void check_size(const FamilySpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("family size must be at least 1");
  // Largest families carry 2n + 2 vertices.
  if (2 * spec.n + 2 > VertexSet::capacity)
    throw std::invalid_argument("family size " + std::to_string(spec.n) + " exceeds vertex capacity");
}

// Vertex of (x, side) in the E x {0,1} labelling.
Vertex xv(std::size_t n, std::size_t x, int side) { return side == 0 ? x : n + x; }

// K(n): half graph (x,0) ~ (y,1) iff x <= y, plus a clique on E x {0}.
Graph half_graph_with_clique(std::size_t n, std::size_t extra) {
  Graph g(2 * n + extra);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x <= y) g.add_edge(xv(n, x, 0), xv(n, y, 1));
      if (x < y) g.add_edge(xv(n, x, 0), xv(n, y, 0));
    }
  return g;
}

}  // namespace

bool is_graph_family(Family f) {
  switch (f) {
    case Family::g0:
    case Family::g1:
    case Family::g2:
    case Family::g3:
    case Family::g4:
    case Family::k:
    case Family::gc:
    case Family::gab:
      return true;
    default:
      return false;
  }
}

std::string family_name(Family f) {
  for (const auto& e : kNames)
    if (e.family == f) return e.name;
  throw std::logic_error("unnamed family");
}

Family parse_family(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& e : kNames)
    if (key == e.name) return e.family;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

const std::vector<Family>& graph_families() {
  static const std::vector<Family> all{Family::g0, Family::g1, Family::g2, Family::g3,
                                       Family::g4, Family::k,  Family::gc, Family::gab};
  return all;
}

const std::vector<Family>& poset_families() {
  static const std::vector<Family> all{Family::q0, Family::q1, Family::q2,  Family::q3,       Family::p1,
                                       Family::p2, Family::pc, Family::pab, Family::pab_split};
  return all;
}

FamilySpec parse_family_spec(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (!parts.empty() && lower(parts.front()) == "family") parts.erase(parts.begin());
  if (parts.size() < 2) throw std::invalid_argument("family spec '" + std::string(text) + "' needs <name>:<n>");

  FamilySpec spec;
  spec.family = parse_family(parts[0]);
  const std::string& size = parts[1];
  if (size.empty() || !std::all_of(size.begin(), size.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("family size '" + size + "' is not a positive integer");
  spec.n = std::stoul(size);
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const std::string flag = lower(parts[i]);
    if (flag == "complement" && is_graph_family(spec.family)) {
      spec.complemented = true;
    } else if (flag == "dual" && !is_graph_family(spec.family)) {
      spec.dualized = true;
    } else {
      throw std::invalid_argument("flag '" + parts[i] + "' does not apply to family " + family_name(spec.family));
    }
  }
  check_size(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = family_name(spec.family) + ":" + std::to_string(spec.n);
  if (spec.complemented) out += ":complement";
  if (spec.dualized) out += ":dual";
  return out;
}

std::optional<std::size_t> prime_threshold(Family f) {
  switch (f) {
    case Family::k:
      return std::nullopt;
    case Family::g0:
    case Family::q0:
      return 3;
    default:
      return 2;
  }
}

Graph gen_graph(const FamilySpec& spec) {
  if (!is_graph_family(spec.family))
    throw std::invalid_argument(family_name(spec.family) + " is not a graph family");
  if (spec.dualized) throw std::invalid_argument("the dual flag applies to poset families only");
  check_size(spec);
  const std::size_t n = spec.n;
  Graph g;
  switch (spec.family) {
    case Family::g0:
      g = Graph(2 * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) g.add_edge(i, n + j);
      break;
    case Family::g1:
      g = Graph(2 * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          if (i < j) g.add_edge(i, n + j - 1);
      break;
    case Family::g2:
      g = Graph(2 * n);
      for (std::size_t v = 0; v + 1 < 2 * n; ++v) g.add_edge(v, v + 1);
      break;
    case Family::g3:
      g = Graph(2 * n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(i, n + i);
        g.add_edge(2 * n, n + i);
      }
      break;
    case Family::g4:
      g = Graph(2 * n);
      for (std::size_t x = 0; x < n; ++x) {
        g.add_edge(xv(n, x, 0), xv(n, x, 1));
        for (std::size_t y = x + 1; y < n; ++y) g.add_edge(xv(n, x, 0), xv(n, y, 0));
      }
      break;
    case Family::k:
      g = half_graph_with_clique(n, 0);
      break;
    case Family::gc:
      g = half_graph_with_clique(n, 1);
      for (std::size_t x = 0; x < n; ++x) g.add_edge(2 * n, xv(n, x, 1));
      break;
    case Family::gab:
      g = half_graph_with_clique(n, 2);
      g.add_edge(2 * n, 2 * n + 1);
      for (std::size_t x = 0; x < n; ++x) g.add_edge(2 * n, xv(n, x, 0));
      break;
    default:
      throw std::logic_error("unhandled graph family");
  }
  return spec.complemented ? complement(g) : g;
}

Poset gen_poset(const FamilySpec& spec) {
  if (is_graph_family(spec.family))
    throw std::invalid_argument(family_name(spec.family) + " is not a poset family");
  if (spec.complemented) throw std::invalid_argument("the complement flag applies to graph families only");
  check_size(spec);
  const std::size_t n = spec.n;
  std::vector<Edge> lt;
  std::size_t size = 2 * n;
  switch (spec.family) {
    case Family::q0:
      // Atoms {i} below coatoms E \ {j} whenever i != j.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) lt.emplace_back(i, n + j);
      break;
    case Family::q1:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) lt.emplace_back(xv(n, x, 0), xv(n, y, 1));
      break;
    case Family::q2:
      // Fence with the a_i minimal: a_i < b_i and a_i < b_{i+1}.
      for (std::size_t i = 0; i < n; ++i) {
        lt.emplace_back(2 * i + 1, 2 * i);
        if (i + 1 < n) lt.emplace_back(2 * i + 1, 2 * i + 2);
      }
      break;
    case Family::q3:
      size = 2 * n + 1;
      for (std::size_t x = 0; x < n; ++x) {
        lt.emplace_back(x, n + x);
        lt.emplace_back(2 * n, n + x);
      }
      break;
    case Family::p1:
      // (x,i) < (y,j) iff i >= j and x < y: a transitive orientation of the
      // complement of G1.
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j <= i; ++j) lt.emplace_back(xv(n, x, i), xv(n, y, j));
      break;
    case Family::p2:
      // Complement of the path 0-1-...-(2n-1), least pair (0,2) oriented upward.
      for (std::size_t k = 0; k < 2 * n; ++k)
        for (std::size_t l = k + 2; l < 2 * n; ++l) lt.emplace_back(k, l);
      break;
    case Family::pc:
    case Family::pab:
    case Family::pab_split: {
      const bool split = spec.family == Family::pab_split;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (x < y) lt.emplace_back(xv(n, x, 0), xv(n, y, 0));
          if (split ? x < y : x <= y) lt.emplace_back(xv(n, x, 0), xv(n, y, 1));
        }
      if (spec.family == Family::pc) {
        size = 2 * n + 1;
        for (std::size_t x = 0; x < n; ++x) lt.emplace_back(2 * n, xv(n, x, 1));
      } else {
        size = 2 * n + 2;
        const Vertex a = 2 * n, b = 2 * n + 1;
        for (std::size_t x = 0; x < n; ++x) lt.emplace_back(xv(n, x, 0), a);
        if (split) {
          for (std::size_t x = 0; x < n; ++x) {
            lt.emplace_back(xv(n, x, 0), b);
            lt.emplace_back(xv(n, x, 1), b);
          }
        } else {
          lt.emplace_back(b, a);
        }
      }
      break;
    }
    default:
      throw std::logic_error("unhandled poset family");
  }
  Poset p = Poset::from_relation(size, lt);
  return spec.dualized ? dual_poset(p) : p;
}

}  // namespace primegraph
