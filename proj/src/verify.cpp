#include "primegraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "primegraph/census.hpp"
#include "primegraph/embed.hpp"
#include "primegraph/extract.hpp"
#include "primegraph/families.hpp"
#include "primegraph/lattice.hpp"
#include "primegraph/modular.hpp"
#include "primegraph/orientation.hpp"

namespace primegraph {

namespace {

using Check = std::optional<std::string>;
using Instances = std::vector<Json>;

struct Suite {
  std::string id;
  // Default bound on instance size; 0 when the suite is not size-bounded.
  std::size_t default_max_n;
  std::function<Instances(const SuiteParams&, std::size_t)> instances;
  std::function<Check(const Json&)> check;
};

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + index);
}

IncidenceStructure random_incidence(std::mt19937_64& rng, std::size_t max_side) {
  const std::size_t e = 1 + rng() % max_side;
  const std::size_t f = 1 + rng() % max_side;
  IncidenceStructure r(e, f);
  for (Vertex x = 0; x < e; ++x)
    for (Vertex y = 0; y < f; ++y)
      if (rng() >> 63) r.relate(x, y);
  return r;
}

Instances graph_census(std::size_t lo, std::size_t hi, GraphFilter filter) {
  Instances out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (const Graph& g : enumerate_graphs(n, filter)) out.push_back(to_json(g));
  return out;
}

OrientationOptions forced() {
  OrientationOptions o;
  o.force = true;
  return o;
}

const Graph& p4() {
  static const Graph g = gen_graph(FamilySpec{Family::g2, 2});
  return g;
}

Lattice boolean_lattice(std::size_t k) {
  std::vector<VertexSet> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    VertexSet s;
    for (Vertex v = 0; v < k; ++v)
      if ((mask >> v) & 1u) s.insert(v);
    all.push_back(s);
  }
  return make_lattice(k, std::move(all));
}

Graph complete_graph(std::size_t k) { return complement(Graph(k)); }

// The eleven pairwise non-isomorphic graphs among the fourteen at finite n:
// over a finite chain C and C* are isomorphic.
std::vector<FamilySpec> antichain_families(std::size_t n) {
  std::vector<FamilySpec> out;
  for (Family f : {Family::g0, Family::g1, Family::g3, Family::g4}) {
    out.push_back(FamilySpec{f, n, false});
    out.push_back(FamilySpec{f, n, true});
  }
  out.push_back(FamilySpec{Family::gc, n});
  out.push_back(FamilySpec{Family::gab, n});
  out.push_back(FamilySpec{Family::gab, n, true});
  return out;
}

std::vector<Vertex> swap_sides(std::size_t n) {
  // (x,i) -> (x,1-i); a and b fixed.
  std::vector<Vertex> perm(2 * n + 2);
  for (Vertex x = 0; x < n; ++x) {
    perm[x] = n + x;
    perm[n + x] = x;
  }
  perm[2 * n] = 2 * n;
  perm[2 * n + 1] = 2 * n + 1;
  return perm;
}

std::vector<Vertex> shift_map(std::size_t n, bool with_apex) {
  // (x,0) -> (x,1), (y,1) -> (y+1,0) into the structure of size n + 1.
  std::vector<Vertex> map(2 * n + (with_apex ? 1 : 0));
  for (Vertex x = 0; x < n; ++x) {
    map[x] = (n + 1) + x;
    map[n + x] = x + 1;
  }
  if (with_apex) map[2 * n] = 2 * (n + 1);
  return map;
}

Check check_identities(std::size_t n) {
  auto graph = [n](Family f, bool comp = false) { return gen_graph(FamilySpec{f, n, comp}); };
  auto comp_of = [n](Family f, bool dual = false) {
    return comparability_graph(gen_poset(FamilySpec{f, n, false, dual}));
  };
  const std::vector<std::tuple<const char*, Family, Graph>> identities{
      {"Comp(Q0) = G0", Family::q0, graph(Family::g0)},
      {"Comp(Q1) = G1", Family::q1, graph(Family::g1)},
      {"Comp(Q2) = G2", Family::q2, graph(Family::g2)},
      {"Comp(Q3) = G3", Family::q3, graph(Family::g3)},
      {"Comp(P1) = complement G1", Family::p1, graph(Family::g1, true)},
      {"Comp(P2) = complement G2", Family::p2, graph(Family::g2, true)},
      {"Comp(PC) = GC", Family::pc, graph(Family::gc)},
      {"Comp(PAB) = GAB", Family::pab, graph(Family::gab)},
  };
  for (const auto& [name, family, expected] : identities) {
    if (comp_of(family) != expected) return std::string(name) + " fails at n = " + std::to_string(n);
    if (comp_of(family, true) != expected) return std::string(name) + " fails for the dual at n = " + std::to_string(n);
  }
  const Graph split = comp_of(Family::pab_split);
  const Graph co_gab = graph(Family::gab, true);
  if (!verify_embedding(split, co_gab, swap_sides(n)) || split.edge_count() != co_gab.edge_count())
    return "Comp(PAB_SPLIT) is not carried onto complement GAB by the side swap at n = " + std::to_string(n);
  return std::nullopt;
}

struct FamilyExpectation {
  std::string kind;
  std::size_t min_m;
};

Check check_extraction(const Json& j) {
  const Graph g = graph_from_json(j.at("graph"));
  const std::string mode = j.value("mode", "both");
  std::vector<ExtractionResult> results;
  try {
    if (mode == "bipartite" || mode == "both") results.push_back(extract_g0_or_g1(g));
    if (mode == "sparse" || mode == "both") results.push_back(extract_g2_or_g3(g));
  } catch (const std::exception& e) {
    return std::string("extraction raised: ") + e.what();
  }
  for (const auto& r : results) {
    if (r.kind == ExtractionKind::failed_below_threshold) continue;
    const Graph pattern = gen_graph(FamilySpec{extraction_family(r.kind), r.m});
    if (!verify_embedding(pattern, g, r.witness)) return to_string(r.kind) + " witness does not re-verify";
  }
  if (j.contains("expect")) {
    const auto& r = results.front();
    const std::string want = j["expect"].at("kind");
    const std::size_t min_m = j["expect"].at("min_m");
    if (to_string(r.kind) != want || r.m < min_m)
      return "expected " + want + " with m >= " + std::to_string(min_m) + ", got " + to_string(r.kind) +
             " with m = " + std::to_string(r.m);
  }
  return std::nullopt;
}

std::vector<Suite> build_suites() {
  std::vector<Suite> s;

  s.push_back({"sumner_p4", 7,
               [](const SuiteParams&, std::size_t bound) { return graph_census(4, bound, GraphFilter::prime); },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j);
                 if (!is_prime_graph(g).prime) return std::nullopt;
                 auto r = induced_embedding(p4(), g);
                 if (!r.is_found()) return "prime graph without induced P4 (" + to_string(r.status) + ")";
                 return std::nullopt;
               }});

  s.push_back({"bipartite_prime", 8,
               [](const SuiteParams&, std::size_t bound) { return graph_census(4, bound, GraphFilter::bipartite); },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j);
                 if (!is_bipartite(g) || g.order() <= 3) return std::nullopt;
                 const bool prime = is_prime_graph(g).prime;
                 const bool expected = is_connected(g) && is_point_determining(g);
                 if (prime != expected)
                   return std::string("prime = ") + (prime ? "true" : "false") +
                          " but connected and point determining = " + (expected ? "true" : "false");
                 return std::nullopt;
               }});

  s.push_back({"complement_prime", 7,
               [](const SuiteParams&, std::size_t bound) { return graph_census(1, bound, GraphFilter::all); },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j);
                 if (is_prime_graph(g).prime != is_prime_graph(complement(g)).prime)
                   return "primality differs from the complement";
                 return std::nullopt;
               }});

  s.push_back({"kelly_two", 7,
               [](const SuiteParams&, std::size_t bound) { return graph_census(4, bound, GraphFilter::prime); },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j);
                 if (!is_prime_graph(g).prime) return std::nullopt;
                 const auto set = transitive_orientations(g, forced());
                 if (set.orientations.empty()) return std::nullopt;
                 if (set.orientations.size() != 2)
                   return std::to_string(set.orientations.size()) + " transitive orientations";
                 if (set.orientations[1] != dual_poset(set.orientations[0]))
                   return "the two orientations are not mutual duals";
                 return std::nullopt;
               }});

  s.push_back({"lattice_selfdual", 6,
               [](const SuiteParams&, std::size_t bound) { return graph_census(1, bound, GraphFilter::all); },
               [](const Json& j) -> Check {
                 auto r = is_self_dual(neighborhood_lattice(graph_from_json(j)));
                 if (!r.is_found()) return "neighbourhood lattice not shown self-dual (" + to_string(r.status) + ")";
                 return std::nullopt;
               }});

  s.push_back({"galois_dual", 0,
               [](const SuiteParams& p, std::size_t) {
                 Instances out;
                 for (std::size_t i = 0; i < p.samples; ++i) {
                   auto rng = instance_rng(p.seed, i);
                   out.push_back(to_json(random_incidence(rng, 5)));
                 }
                 return out;
               },
               [](const Json& j) -> Check {
                 auto r = dual_galois_check(incidence_from_json(j));
                 if (!r.is_found()) return "Gal(R^-1) not shown isomorphic to the dual of Gal(R) (" + to_string(r.status) + ")";
                 return std::nullopt;
               }});

  s.push_back({"lem2_singleton", 7,
               [](const SuiteParams&, std::size_t bound) {
                 Instances out;
                 for (std::size_t n = 1; n <= bound; ++n)
                   for (const Graph& g : enumerate_graphs(n))
                     if (is_point_determining(g)) out.push_back(to_json(g));
                 return out;
               },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j);
                 if (!is_point_determining(g)) return std::nullopt;
                 const Lattice l = neighborhood_lattice(g);
                 for (std::size_t i = 1; i < l.size(); ++i) {
                   const auto lower = l.lower_covers(i);
                   if (lower.size() == 1 && l.elements[lower[0]].empty() && l.elements[i].size() != 1)
                     return "atom of size " + std::to_string(l.elements[i].size());
                 }
                 return std::nullopt;
               }});

  s.push_back({"quotient_iso", 6,
               [](const SuiteParams&, std::size_t bound) { return graph_census(1, bound, GraphFilter::all); },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j);
                 const Lattice a = neighborhood_lattice(g);
                 const Lattice b = neighborhood_lattice(point_determining_quotient(g).quotient);
                 if (a.size() != b.size())
                   return "lattice sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size());
                 auto r = find_order_isomorphism(inclusion_order(a), inclusion_order(b));
                 if (!r.is_found()) return "lattices not shown isomorphic (" + to_string(r.status) + ")";
                 return std::nullopt;
               }});

  s.push_back({"ferrers_chain", 0,
               [](const SuiteParams& p, std::size_t) {
                 Instances out;
                 for (std::size_t i = 0; i < p.samples; ++i) {
                   auto rng = instance_rng(p.seed, i);
                   IncidenceStructure r = random_incidence(rng, 6);
                   if (i % 2 == 1) {
                     // Nested rows: a Ferrers relation, perturbed in one cell every fourth sample.
                     std::vector<Vertex> cols(r.f_size());
                     for (std::size_t y = 0; y < cols.size(); ++y) cols[y] = y;
                     std::shuffle(cols.begin(), cols.end(), rng);
                     for (Vertex x = 0; x < r.e_size(); ++x) {
                       const std::size_t t = rng() % (r.f_size() + 1);
                       for (std::size_t k = 0; k < r.f_size(); ++k) r.relate(x, cols[k], k < t);
                     }
                     if (i % 4 == 3) {
                       const Vertex x = rng() % r.e_size(), y = rng() % r.f_size();
                       r.relate(x, y, !r.related(x, y));
                     }
                   }
                   out.push_back(to_json(r));
                 }
                 return out;
               },
               [](const Json& j) -> Check {
                 const IncidenceStructure r = incidence_from_json(j);
                 const bool ferrers = is_ferrers(r);
                 const bool chain = galois_lattice(r).is_chain();
                 if (ferrers != chain)
                   return std::string("Ferrers = ") + (ferrers ? "true" : "false") + " but chain = " + (chain ? "true" : "false");
                 return std::nullopt;
               }});

  s.push_back({"coding_monotone", 0,
               [](const SuiteParams& p, std::size_t) {
                 Instances out;
                 for (std::size_t i = 0; i < p.samples; ++i) {
                   auto rng = instance_rng(p.seed, i);
                   const IncidenceStructure small = random_incidence(rng, 4);
                   IncidenceStructure big = random_incidence(rng, 6);
                   if (i % 2 == 0) {
                     // Plant an injective coding of small into a large enough big.
                     const std::size_t e = std::max(big.e_size(), small.e_size());
                     const std::size_t f = std::max(big.f_size(), small.f_size());
                     IncidenceStructure grown(e, f);
                     for (Vertex x = 0; x < e; ++x)
                       for (Vertex y = 0; y < f; ++y)
                         grown.relate(x, y, x < big.e_size() && y < big.f_size() ? big.related(x, y) : (rng() >> 63) != 0);
                     std::vector<Vertex> fx(e), gy(f);
                     for (std::size_t k = 0; k < e; ++k) fx[k] = k;
                     for (std::size_t k = 0; k < f; ++k) gy[k] = k;
                     std::shuffle(fx.begin(), fx.end(), rng);
                     std::shuffle(gy.begin(), gy.end(), rng);
                     for (Vertex x = 0; x < small.e_size(); ++x)
                       for (Vertex y = 0; y < small.f_size(); ++y) grown.relate(fx[x], gy[y], small.related(x, y));
                     big = grown;
                   }
                   out.push_back(Json{{"small", to_json(small)}, {"big", to_json(big)}});
                 }
                 return out;
               },
               [](const Json& j) -> Check {
                 const IncidenceStructure small = incidence_from_json(j.at("small"));
                 const IncidenceStructure big = incidence_from_json(j.at("big"));
                 auto coding = find_coding(small, big);
                 if (!coding.is_found()) return std::nullopt;
                 auto r = order_embeds(galois_lattice(small), galois_lattice(big));
                 if (!r.is_found()) return "coding exists but Gal(R) not shown to embed (" + to_string(r.status) + ")";
                 return std::nullopt;
               }});

  s.push_back({"cor3_boolean", 4,
               [](const SuiteParams& p, std::size_t bound) {
                 Instances out;
                 const std::size_t count = std::max<std::size_t>(1, p.samples / 10);
                 for (std::size_t i = 0; i < count; ++i) {
                   auto rng = instance_rng(p.seed, i);
                   const std::size_t k = 1 + rng() % bound;
                   const bool bipartite = rng() >> 63;
                   const Graph core = bipartite ? gen_graph(FamilySpec{Family::g0, k}) : complete_graph(k);
                   const std::size_t n = core.order() + rng() % 4;
                   Graph g(n);
                   for (Vertex u = 0; u < n; ++u)
                     for (Vertex v = u + 1; v < n; ++v)
                       if (v < core.order() ? core.adjacent(u, v) : (rng() >> 63) != 0) g.add_edge(u, v);
                   std::vector<Vertex> perm(n);
                   for (std::size_t v = 0; v < n; ++v) perm[v] = v;
                   std::shuffle(perm.begin(), perm.end(), rng);
                   out.push_back(Json{{"graph", to_json(relabel(g, perm))}, {"k", k}});
                 }
                 return out;
               },
               [](const Json& j) -> Check {
                 const Graph g = graph_from_json(j.at("graph"));
                 const std::size_t k = j.at("k");
                 const bool has = induced_embedding(gen_graph(FamilySpec{Family::g0, k}), g).is_found() ||
                                  induced_embedding(complete_graph(k), g).is_found();
                 if (!has) return std::nullopt;
                 auto r = order_embeds(boolean_lattice(k), neighborhood_lattice(g));
                 if (!r.is_found()) return "powerset of " + std::to_string(k) + " not shown to embed (" + to_string(r.status) + ")";
                 return std::nullopt;
               }});

  s.push_back({"family_prime", 20,
               [](const SuiteParams&, std::size_t bound) {
                 Instances out;
                 for (Family f : {Family::g0, Family::g1, Family::g2, Family::g3, Family::g4, Family::gc, Family::gab})
                   for (bool comp : {false, true})
                     for (std::size_t n = 1; n <= bound; ++n)
                       out.push_back(Json{{"family", to_string(FamilySpec{f, n, comp})}});
                 return out;
               },
               [](const Json& j) -> Check {
                 const FamilySpec spec = parse_family_spec(j.at("family").get<std::string>());
                 const bool prime = is_prime_graph(gen_graph(spec)).prime;
                 const auto threshold = prime_threshold(spec.family);
                 if (threshold && spec.n >= *threshold && !prime) return "not prime at or above the threshold";
                 if (spec.family == Family::g0 && spec.n == 2 && prime) return "G0(2) is prime";
                 return std::nullopt;
               }});

  s.push_back({"fourteen_antichain", 0,
               [](const SuiteParams&, std::size_t) {
                 Instances out;
                 const auto fams = antichain_families(8);
                 for (const auto& a : fams)
                   for (const auto& b : fams)
                     if (!(a == b)) out.push_back(Json{{"a", to_string(a)}, {"b", to_string(b)}, {"size_max", 6}, {"probe_bound", 12}});
                 return out;
               },
               [](const Json& j) -> Check {
                 const FamilySpec a = parse_family_spec(j.at("a").get<std::string>());
                 const FamilySpec b = parse_family_spec(j.at("b").get<std::string>());
                 SeparationOptions o;
                 o.n_probe = a.n;
                 o.size_max = j.value("size_max", std::size_t{6});
                 o.probe_bound = j.value("probe_bound", std::size_t{12});
                 const Separation sep = separating_witness(a, b, o);
                 if (!sep.witness) return "no separating graph of size <= " + std::to_string(o.size_max) + " (" + to_string(sep.status) + ")";
                 if (!verify_embedding(*sep.witness, gen_graph(a), sep.into_a)) return "witness does not embed in the first family";
                 for (std::size_t m = 1; m <= o.probe_bound; ++m) {
                   FamilySpec bm = b;
                   bm.n = m;
                   if (!induced_embedding(*sep.witness, gen_graph(bm)).is_none())
                     return "witness is not excluded from the second family at n = " + std::to_string(m);
                 }
                 return std::nullopt;
               }});

  s.push_back({"comp_identifications", 8,
               [](const SuiteParams&, std::size_t bound) {
                 Instances out;
                 for (std::size_t n = 1; n <= bound; ++n) out.push_back(Json{{"n", n}});
                 return out;
               },
               [](const Json& j) -> Check { return check_identities(j.at("n").get<std::size_t>()); }});

  s.push_back({"kc_into_complement", 8,
               [](const SuiteParams&, std::size_t bound) {
                 Instances out;
                 for (std::size_t n = 1; n <= bound; ++n) out.push_back(Json{{"n", n}});
                 return out;
               },
               [](const Json& j) -> Check {
                 const std::size_t n = j.at("n");
                 if (!verify_embedding(gen_graph(FamilySpec{Family::k, n}),
                                       gen_graph(FamilySpec{Family::k, n + 1, true}), shift_map(n, false)))
                   return "shift map does not embed K(n) into the complement of K(n+1)";
                 if (!verify_embedding(gen_graph(FamilySpec{Family::gc, n}),
                                       gen_graph(FamilySpec{Family::gc, n + 1, true}), shift_map(n, true)))
                   return "shift map does not embed GC(n) into the complement of GC(n+1)";
                 return std::nullopt;
               }});

  s.push_back({"q3_dimension", 6,
               [](const SuiteParams&, std::size_t bound) {
                 Instances out;
                 for (std::size_t n = 3; n <= bound; ++n) out.push_back(Json{{"n", n}});
                 return out;
               },
               [](const Json& j) -> Check {
                 const std::size_t n = j.at("n");
                 const auto d = order_dimension(gen_poset(FamilySpec{Family::q3, n})).dimension;
                 if (d != 3u) return "dimension " + (d ? std::to_string(*d) : std::string("> 4"));
                 return std::nullopt;
               }});

  s.push_back({"dim2_criterion", 6,
               [](const SuiteParams&, std::size_t bound) {
                 Instances out;
                 for (std::size_t n = 1; n <= bound; ++n)
                   for (const Poset& p : enumerate_posets(n)) out.push_back(to_json(p));
                 return out;
               },
               [](const Json& j) -> Check {
                 const Poset p = poset_from_json(j);
                 DimensionOptions o;
                 o.k_max = 2;
                 const bool realizer = order_dimension(p, o).dimension.has_value();
                 const bool complement = is_comparability(incomparability_graph(p), forced());
                 if (realizer != complement)
                   return std::string("dimension <= 2 is ") + (realizer ? "true" : "false") +
                          " but the incomparability graph test says " + (complement ? "true" : "false");
                 return std::nullopt;
               }});

  s.push_back({"extraction_sound", 14,
               [](const SuiteParams& p, std::size_t bound) {
                 Instances out;
                 const std::vector<std::tuple<Family, std::size_t, const char*, const char*, std::size_t>> fixed{
                     {Family::g0, 12, "bipartite", "G0_PREFIX", 3},
                     {Family::g1, 12, "bipartite", "G1_PREFIX", 3},
                     {Family::g2, 15, "sparse", "G2_PREFIX", 5},
                     {Family::g3, 15, "sparse", "G3_PREFIX", 3},
                 };
                 for (const auto& [f, n, mode, kind, min_m] : fixed)
                   out.push_back(Json{{"graph", to_json(gen_graph(FamilySpec{f, n}))},
                                      {"mode", mode},
                                      {"expect", {{"kind", kind}, {"min_m", min_m}}}});
                 const std::size_t count = p.samples / 10;
                 const std::size_t lo = std::min<std::size_t>(4, bound);
                 for (std::size_t i = 0; i < count; ++i) {
                   auto rng = instance_rng(p.seed, i);
                   while (true) {
                     const std::size_t n = lo + rng() % (bound - lo + 1);
                     const Graph g = random_graph(n, rng());
                     if (!is_prime_graph(g).prime) continue;
                     out.push_back(Json{{"graph", to_json(g)}, {"mode", "both"}});
                     break;
                   }
                 }
                 return out;
               },
               check_extraction});
  return s;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = build_suites();
  return all;
}

const Suite& find_suite(const std::string& id) {
  for (const auto& s : suites())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown suite '" + id + "'");
}

}  // namespace

Graph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() >> 63) g.add_edge(u, v);
  return g;
}

Json SuiteReport::to_json(bool with_time) const {
  Json v = Json::array();
  for (const auto& x : violations) v.push_back(Json{{"index", x.index}, {"input", x.input}, {"message", x.message}});
  Json out{{"suite", suite}, {"instances", instances}, {"violations", v}, {"parameters", parameters}, {"passed", passed()}};
  if (with_time) out["wall_seconds"] = wall_seconds;
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

bool is_suite(const std::string& id) {
  return std::find(suite_ids().begin(), suite_ids().end(), id) != suite_ids().end();
}

SuiteReport run_suite(const std::string& id, const SuiteParams& params) {
  const Suite& suite = find_suite(id);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t bound =
      suite.default_max_n == 0 ? 0 : (params.max_n == 0 ? suite.default_max_n : std::min(params.max_n, suite.default_max_n));
  const Instances instances = suite.instances(params, bound);

  const std::size_t jobs = std::max<std::size_t>(1, std::min(params.jobs, instances.size()));
  std::vector<std::vector<Violation>> found(jobs);
  auto work = [&](std::size_t shard) {
    const std::size_t lo = instances.size() * shard / jobs;
    const std::size_t hi = instances.size() * (shard + 1) / jobs;
    for (std::size_t i = lo; i < hi; ++i) {
      Check c;
      try {
        c = suite.check(instances[i]);
      } catch (const std::exception& e) {
        c = std::string("checker raised: ") + e.what();
      }
      if (c) found[shard].push_back(Violation{i, instances[i], *c});
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  SuiteReport report;
  report.suite = id;
  report.instances = instances.size();
  for (auto& shard : found)
    for (auto& v : shard) report.violations.push_back(std::move(v));
  report.parameters = Json{{"seed", params.seed}, {"samples", params.samples}};
  if (bound != 0) report.parameters["max_n"] = bound;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::string> check_instance(const std::string& id, const Json& input) {
  return find_suite(id).check(input);
}

}  // namespace primegraph
