// Acceptance run: one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "primegraph/census.hpp"
#include "primegraph/embed.hpp"
#include "primegraph/families.hpp"
#include "primegraph/modular.hpp"
#include "primegraph/verify.hpp"

using namespace primegraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs the listed suites with the documented defaults and tallies violations.
Outcome suites(const std::vector<std::string>& ids, std::size_t samples = 10'000) {
  Outcome o;
  SuiteParams p;
  p.samples = samples;
  p.jobs = jobs();
  std::ostringstream d;
  for (const auto& id : ids) {
    const SuiteReport r = run_suite(id, p);
    d << id << " " << r.instances << " instances, " << r.violations.size() << " violations; ";
    if (!r.passed()) {
      o.pass = false;
      d << "first: " << r.violations.front().message << " on " << r.violations.front().input.dump() << "; ";
    }
  }
  o.detail = d.str();
  if (o.detail.size() >= 2) o.detail.resize(o.detail.size() - 2);
  return o;
}

Outcome census() {
  Outcome o;
  std::ostringstream d;
  const std::vector<std::size_t> published{156, 1044};
  d << "counts";
  for (std::size_t n = 1; n <= 7; ++n) {
    const std::size_t count = enumerate_graphs(n).size();
    const std::size_t expected = n <= 5 ? oracle::graph_classes(n) : published[n - 6];
    d << " " << count;
    if (count != expected) {
      o.pass = false;
      d << "(expected " << expected << ")";
    }
  }
  const auto prime4 = enumerate_graphs(4, GraphFilter::prime);
  const bool p4 = prime4.size() == 1 && oracle::isomorphic(prime4[0], gen_graph(FamilySpec{Family::g2, 2}));
  o.pass = o.pass && p4;
  d << "; prime filter at n = 4 gives " << prime4.size() << " class" << (p4 ? " (P4)" : "");
  o.detail = d.str();
  return o;
}

// Literal reading: every graph family with a primality threshold, and its
// complement, is prime exactly from its threshold on, for n <= 20.
Outcome family_thresholds() {
  Outcome o;
  std::ostringstream d;
  std::size_t checked = 0;
  std::vector<std::string> wrong;
  for (Family f : {Family::g0, Family::g1, Family::g2, Family::g3, Family::g4, Family::gc, Family::gab})
    for (bool comp : {false, true})
      for (std::size_t n = 1; n <= 20; ++n) {
        const FamilySpec spec{f, n, comp};
        const bool prime = is_prime_graph(gen_graph(spec)).prime;
        const bool expected = n >= *prime_threshold(f);
        ++checked;
        if (prime != expected) {
          wrong.push_back(to_string(spec) + (prime ? " prime below threshold" : " not prime at threshold"));
        }
      }
  const Outcome suite = suites({"family_prime"});
  o.pass = wrong.empty() && suite.pass;
  d << checked << " members; " << wrong.size() << " violations";
  for (const auto& w : wrong) d << "; " << w;
  if (!wrong.empty()) d << " (GAB(1) is P4)";
  d << "; " << suite.detail;
  o.detail = d.str();
  return o;
}

// Over the reversed chain: (x,0) ~ (y,1) iff x >= y, clique on E x {0}.
Graph reversed_chain_member(Family f, std::size_t n, bool comp) {
  const std::size_t extra = f == Family::gc ? 1 : 2;
  Graph g(2 * n + extra);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (x >= y) g.add_edge(x, n + y);
      if (x < y) g.add_edge(x, y);
    }
  if (f == Family::gc) {
    for (Vertex x = 0; x < n; ++x) g.add_edge(2 * n, n + x);
  } else {
    g.add_edge(2 * n, 2 * n + 1);
    for (Vertex x = 0; x < n; ++x) g.add_edge(2 * n, x);
  }
  return comp ? complement(g) : g;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && induced_embedding(a, b).is_found();
}

Outcome fourteen() {
  Outcome o;
  std::ostringstream d;
  const std::size_t n = 8;
  struct Member {
    std::string name;
    Graph g;
    std::size_t cls;  // index among the pairwise non-isomorphic members
  };
  std::vector<Member> members;
  std::size_t cls = 0;
  for (Family f : {Family::g0, Family::g1, Family::g3, Family::g4})
    for (bool comp : {false, true}) members.push_back({to_string(FamilySpec{f, n, comp}), gen_graph(FamilySpec{f, n, comp}), cls++});
  for (auto [f, comp] : {std::pair{Family::gc, false}, {Family::gab, false}, {Family::gab, true}}) {
    const Graph over_c = gen_graph(FamilySpec{f, n, comp});
    const Graph over_dual = reversed_chain_member(f, n, comp);
    const std::string name = to_string(FamilySpec{f, n, comp});
    members.push_back({name, over_c, cls});
    members.push_back({name + " over C*", over_dual, cls});
    if (!isomorphic(over_c, over_dual)) {
      o.pass = false;
      d << name << " over C and C* differ; ";
    }
    ++cls;
  }
  std::size_t distinct = 0, collapsed = 0;
  for (const auto& a : members)
    for (const auto& b : members) {
      if (&a == &b) continue;
      (a.cls == b.cls ? collapsed : distinct) += 1;
    }
  const Outcome suite = suites({"fourteen_antichain"});
  o.pass = o.pass && suite.pass;
  d << members.size() << " members in " << cls << " isomorphism classes at n = 8 (C and C* coincide); " << distinct
    << " ordered pairs of non-isomorphic members, " << collapsed << " ordered C/C* pairs isomorphic; " << suite.detail;
  o.detail = d.str();
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "census", 120, census},
      {2, "sumner_p4 bipartite_prime complement_prime", 300,
       [] { return suites({"sumner_p4", "bipartite_prime", "complement_prime"}); }},
      {3, "kelly_two", 0, [] { return suites({"kelly_two"}); }},
      {4, "lattice_selfdual galois_dual", 0, [] { return suites({"lattice_selfdual", "galois_dual"}); }},
      {5, "ferrers_chain coding_monotone", 0, [] { return suites({"ferrers_chain", "coding_monotone"}); }},
      {6, "family_prime", 0, family_thresholds},
      {7, "fourteen_antichain", 600, fourteen},
      {8, "comp_identifications q3_dimension dim2_criterion", 0,
       [] { return suites({"comp_identifications", "q3_dimension", "dim2_criterion"}); }},
      {9, "extraction_sound", 0, [] { return suites({"extraction_sound"}); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("raised: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    all = all && o.pass;
    char time[32];
    std::snprintf(time, sizeof time, "%.1f s", seconds);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << o.detail << " (" << time << ")"
              << std::endl;
  }
  return all ? 0 : 1;
}
