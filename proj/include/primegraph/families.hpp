#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

// Graph and poset families at finite truncation n, i.e. over the chain
// E = {0 < 1 < ... < n-1}. Over a finite chain C and its dual C* are
// isomorphic, so the families built over C and over C* coincide here.
//
// Labelling (x ranges over E):
//   G0, G1      a_i -> i, b_j -> n + j. G1 uses b-indices 1..n (edge iff i < j),
//               so b_j -> n + j - 1; this is the "x <= x'" form over E.
//   G2          path b_0 a_0 b_1 a_1 ... b_{n-1} a_{n-1} labelled 0..2n-1 in
//               path order (b_i -> 2i, a_i -> 2i + 1).
//   G3          a_i -> i, b_i -> n + i, c -> 2n.
//   G4, K, GC,  (x,0) -> x, (x,1) -> n + x, c -> 2n (GC), a -> 2n and
//   GAB         b -> 2n + 1 (GAB).
//   Q0..Q3, P1, P2, PC, PAB, PAB_SPLIT use the labelling of the matching graph.
enum class Family { g0, g1, g2, g3, g4, k, gc, gab, q0, q1, q2, q3, p1, p2, pc, pab, pab_split };

bool is_graph_family(Family f);
std::string family_name(Family f);
// Accepts the lower-case names ("g0", "gab", "pab_split", ...); throws
// std::invalid_argument on anything else.
Family parse_family(std::string_view name);
const std::vector<Family>& graph_families();
const std::vector<Family>& poset_families();

struct FamilySpec {
  Family family = Family::g0;
  std::size_t n = 1;
  bool complemented = false;  // graph families only
  bool dualized = false;      // poset families only

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// "g1:8", "gab:5:complement", "q3:4:dual"; the "family:" prefix is optional.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Least n from which the family is prime: 3 for G0 and Q0, 2 otherwise. K has
// none because K(n) is never prime at finite n: {(n-1,0), (n-1,1)} is
// autonomous.
std::optional<std::size_t> prime_threshold(Family f);

Graph gen_graph(const FamilySpec& spec);
Poset gen_poset(const FamilySpec& spec);

}  // namespace primegraph
