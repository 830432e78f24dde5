#include <doctest.h>

#include "oracles.hpp"
#include "primegraph/embed.hpp"
#include "primegraph/families.hpp"
#include "primegraph/modular.hpp"

using namespace primegraph;

namespace {

Graph graph(Family f, std::size_t n, bool comp = false) { return gen_graph(FamilySpec{f, n, comp}); }
Poset poset(Family f, std::size_t n, bool dual = false) { return gen_poset(FamilySpec{f, n, false, dual}); }

}  // namespace

TEST_CASE("family specs parse and print") {
  const FamilySpec s = parse_family_spec("family:gab:5:complement");
  CHECK(s.family == Family::gab);
  CHECK(s.n == 5);
  CHECK(s.complemented);
  CHECK(to_string(s) == "gab:5:complement");
  CHECK(parse_family_spec("q3:4:dual") == FamilySpec{Family::q3, 4, false, true});
  CHECK(parse_family_spec("G1:8").family == Family::g1);
  CHECK_THROWS_AS(parse_family_spec("nope:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("g1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("g1:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("g1:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("g1:3:dual"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("q1:3:complement"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("g1:200"), std::invalid_argument);
  CHECK_THROWS_AS(gen_graph(FamilySpec{Family::q1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(gen_poset(FamilySpec{Family::g1, 2}), std::invalid_argument);
}

TEST_CASE("small members") {
  CHECK(graph(Family::g2, 2) == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph g0 = graph(Family::g0, n);
    CHECK(g0.edge_count() == n * (n - 1));
    for (Vertex i = 0; i < n; ++i) CHECK_FALSE(g0.adjacent(i, n + i));
    CHECK(graph(Family::g1, n).edge_count() == n * (n + 1) / 2);
    const Graph k = graph(Family::k, n);
    CHECK(oracle::to_mask(maximum_clique(induced(k, VertexSet::range(n)))) == (oracle::Mask{1} << n) - 1);
  }
}

TEST_CASE("bipartite families") {
  for (Family f : {Family::g0, Family::g1, Family::g2, Family::g3})
    for (std::size_t n = 1; n <= 8; ++n) CHECK(is_bipartite(graph(f, n)));
  for (std::size_t n = 2; n <= 8; ++n) {
    VertexSet side;
    REQUIRE(is_bipartite(graph(Family::g0, n), &side));
    CHECK(side == VertexSet::range(n));
  }
}

TEST_CASE("primality thresholds agree with brute force") {
  for (Family f : graph_families())
    for (bool comp : {false, true})
      for (std::size_t n = 1; 2 * n + 2 <= 14; ++n) {
        const Graph g = graph(f, n, comp);
        const bool prime = is_prime_graph(g).prime;
        CAPTURE(to_string(FamilySpec{f, n, comp}));
        CHECK(prime == oracle::prime(g));
        const auto threshold = prime_threshold(f);
        if (f == Family::g2) {
          CHECK(prime == (n >= 2));
        } else if (f == Family::gab) {
          // At n = 1 the graph is P4.
          CHECK(prime);
        } else if (threshold) {
          CHECK(prime == (n >= *threshold));
        } else {
          CHECK_FALSE(prime);
        }
      }
}

TEST_CASE("K(n) is never prime at finite n") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Graph k = graph(Family::k, n);
    CHECK(is_autonomous(k, VertexSet{static_cast<Vertex>(n - 1), static_cast<Vertex>(2 * n - 1)}));
  }
}

TEST_CASE("comparability graphs of the poset families") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(comparability_graph(poset(Family::q1, n)) == graph(Family::g1, n));
    CHECK(comparability_graph(poset(Family::pc, n)) == graph(Family::gc, n));
    CHECK(comparability_graph(poset(Family::p1, n)) == graph(Family::g1, n, true));
    CHECK(comparability_graph(poset(Family::p2, n)) == graph(Family::g2, n, true));
    CHECK(oracle::isomorphic(comparability_graph(poset(Family::pab_split, n)), graph(Family::gab, n, true)));
    CHECK(oracle::isomorphic(comparability_graph(poset(Family::q0, n)), graph(Family::g0, n)));
    for (Family f : poset_families())
      CHECK(comparability_graph(poset(f, n, true)) == comparability_graph(poset(f, n)));
  }
  CHECK(poset(Family::p2, 3).less(0, 2));
}

TEST_CASE("shift map carries K(n) into the complement of K(n+1)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    EmbeddingMap map(2 * n);
    for (Vertex x = 0; x < n; ++x) {
      map[x] = (n + 1) + x;
      map[n + x] = x + 1;
    }
    CHECK(verify_embedding(graph(Family::k, n), graph(Family::k, n + 1, true), map));
    CHECK(oracle::induced_embeds(graph(Family::gc, n), graph(Family::gc, n + 1, true)));
  }
}

TEST_CASE("over the reversed chain the graphs are isomorphic") {
  // K(C*): (x,0) ~ (y,1) iff x >= y, clique on E x {0}; G_c adds c ~ E x {1};
  // G_ab adds a ~ E x {0} and a ~ b.
  for (std::size_t n = 1; n <= 5; ++n) {
    Graph kr(2 * n + 2);
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (x >= y) kr.add_edge(x, n + y);
        if (x < y) kr.add_edge(x, y);
      }
    Graph gc = induced(kr, VertexSet::range(2 * n + 1));
    for (Vertex x = 0; x < n; ++x) gc.add_edge(2 * n, n + x);
    Graph gab = kr;
    gab.add_edge(2 * n, 2 * n + 1);
    for (Vertex x = 0; x < n; ++x) gab.add_edge(2 * n, x);
    CHECK(oracle::isomorphic(gc, graph(Family::gc, n)));
    CHECK(oracle::isomorphic(gab, graph(Family::gab, n)));
    CHECK(oracle::isomorphic(complement(gab), graph(Family::gab, n, true)));
  }
}
