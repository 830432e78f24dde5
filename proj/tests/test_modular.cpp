#include <doctest.h>

#include "oracles.hpp"
#include "primegraph/census.hpp"
#include "primegraph/families.hpp"
#include "primegraph/modular.hpp"
#include "primegraph/verify.hpp"

using namespace primegraph;

namespace {

Graph p4() { return gen_graph(FamilySpec{Family::g2, 2}); }
Graph k(std::size_t n) { return complement(Graph(n)); }

}  // namespace

TEST_CASE("trivial sets are autonomous") {
  const Graph g = random_graph(6, 11);
  CHECK(is_autonomous(g, VertexSet{}));
  CHECK(is_autonomous(g, VertexSet{3}));
  CHECK(is_autonomous(g, g.vertices()));
  CHECK_FALSE(is_autonomous(gen_graph(FamilySpec{Family::g0, 4}), VertexSet{0, 1}));
  for (oracle::Mask m = 0; m < 32; ++m) CHECK(is_autonomous(k(5), oracle::from_mask(m)));
}

TEST_CASE("autonomous closure matches the intersection of all autonomous supersets") {
  CHECK(autonomous_closure(k(5), VertexSet{1, 3}) == VertexSet{1, 3});
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(autonomous_closure(p4(), VertexSet{u, v}) == p4().vertices());
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const Graph g = random_graph(n, seed * 31 + n);
      for (oracle::Mask m = 1; m < (oracle::Mask{1} << n); m += 3) {
        const VertexSet c = autonomous_closure(g, oracle::from_mask(m));
        CHECK(is_autonomous(g, c));
        CHECK(oracle::to_mask(c) == oracle::autonomous_closure(g, m));
      }
    }
}

TEST_CASE("primality agrees with the brute-force test") {
  CHECK(is_prime_graph(p4()).prime);
  for (const Graph& g : enumerate_graphs(3)) {
    const auto r = is_prime_graph(g);
    CHECK_FALSE(r.prime);
    CHECK_FALSE(r.indecomposable);
    CHECK(r.trivial_size);
  }
  CHECK(is_prime_graph(Graph(2)).indecomposable);
  CHECK_FALSE(is_prime_graph(Graph(1)).prime);
  std::size_t prime4 = 0;
  for (const Graph& g : enumerate_graphs(4)) prime4 += oracle::prime(g) ? 1 : 0;
  CHECK(prime4 == 1);
  for (std::size_t n = 4; n <= 9; ++n)
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Graph g = random_graph(n, seed + 1000 * n);
      const auto r = is_prime_graph(g);
      CHECK(r.prime == oracle::prime(g));
      CHECK(r.witness.has_value() == !r.indecomposable);
      if (r.witness) {
        CHECK(is_autonomous(g, *r.witness));
        CHECK(r.witness->size() >= 2);
        CHECK(r.witness->size() < n);
      }
    }
}

TEST_CASE("point determining graphs and the quotient") {
  // Complement of two disjoint edges: the 4-cycle K_{2,2}.
  const Graph k22 = complement(gen_graph(FamilySpec{Family::g0, 2}));
  CHECK(k22.edge_count() == 4);
  CHECK_FALSE(is_point_determining(k22));
  CHECK(is_point_determining(p4()));
  const auto q = point_determining_quotient(k22);
  CHECK(q.quotient.order() == 2);
  CHECK(q.quotient.edge_count() == 1);
  CHECK(q.classes.size() == 2);
  CHECK(q.classes[0].size() == 2);
  const Graph g = random_graph(7, 5);
  if (is_point_determining(g)) CHECK(point_determining_quotient(g).quotient == g);
  for (std::size_t n = 4; n <= 7; ++n)
    for (const Graph& h : enumerate_graphs(n, GraphFilter::prime)) CHECK(is_point_determining(h));
}

TEST_CASE("poset primality agrees with the comparability graph") {
  std::vector<Edge> lt;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) lt.emplace_back(u, v);
  CHECK_FALSE(is_prime_poset(Poset::from_relation(5, lt)).prime);
  for (std::size_t n = 3; n <= 6; ++n) CHECK(is_prime_poset(gen_poset(FamilySpec{Family::q0, n})).prime);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const bool prime = is_prime_poset(p).prime;
      CHECK(prime == oracle::poset_prime(p));
      CHECK(prime == is_prime_graph(comparability_graph(p)).prime);
    }
}
