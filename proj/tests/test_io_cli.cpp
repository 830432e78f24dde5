#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "primegraph/cli.hpp"
#include "primegraph/families.hpp"
#include "primegraph/io.hpp"
#include "primegraph/verify.hpp"

using namespace primegraph;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("primegraph_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("structure JSON round trips") {
  const Graph g = random_graph(7, 4);
  CHECK(graph_from_json(Json::parse(to_json(g).dump())) == g);
  const Poset p = gen_poset(FamilySpec{Family::pab, 3});
  CHECK(poset_from_json(Json::parse(to_json(p).dump())) == p);
  IncidenceStructure r(2, 3);
  r.relate(0, 2);
  r.relate(1, 0);
  CHECK(incidence_from_json(Json::parse(to_json(r).dump())) == r);
  const Lattice l = neighborhood_lattice(g);
  const Lattice back = lattice_from_json(Json::parse(to_json(l).dump()));
  CHECK(back.elements == l.elements);
  CHECK(back.covers == l.covers);
  CHECK(to_json(p)["lt"].size() == p.relation().size());
}

TEST_CASE("loaders reject malformed input") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"type":"graph","n":2,"edges":[[0,2]]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"type":"poset","n":2,"lt":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"type":"poset","n":3,"lt":[[0,1],[1,2]]})")), std::invalid_argument);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"type":"lattice","universe":2,"elements":[[0],[1],[0,1]],"covers":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(incidence_from_json(Json::parse(R"({"type":"incidence","e":1,"f":1,"rho":[[0,1]]})")),
                  std::invalid_argument);
}

TEST_CASE("DOT output") {
  const Graph p4 = gen_graph(FamilySpec{Family::g2, 2});
  CHECK(to_dot(p4).rfind("graph G {", 0) == 0);
  CHECK(to_dot(p4).find("1 -- 2;") != std::string::npos);
  CHECK(to_dot(gen_poset(FamilySpec{Family::q1, 2})).find("rankdir=BT") != std::string::npos);
  CHECK(to_dot(neighborhood_lattice(p4)).find("label=\"{0,2}\"") != std::string::npos);
}

TEST_CASE("command parsing") {
  const Command gen = parse_command({"gen", "--family", "g1", "--n", "8"});
  CHECK(gen.verb == Verb::gen);
  CHECK(gen.family == "g1");
  CHECK(gen.n == 8);
  const Command verify = parse_command({"verify", "--suite", "all", "--max-n", "6"});
  CHECK(verify.verb == Verb::verify);
  CHECK(verify.suite == "all");
  CHECK(verify.max_n == 6);
  CHECK(verify.samples == 10'000);
  CHECK(verify.seed == 0);
  try {
    parse_command({"gen", "--family", "nope"});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("--family") != std::string::npos);
  }
  try {
    parse_command({"embed", "--pattern", "family:g2:2", "--target", "x", "--bogus"});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("--bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_command({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(parse_command({"gen", "--family", "g1"}), UsageError);
  CHECK_THROWS_AS(parse_command({"gen", "--family", "q1", "--n", "2", "--complement"}), UsageError);
  CHECK_THROWS_AS(parse_command({"dim", "family:q3:3", "--max", "5"}), UsageError);
  CHECK_THROWS_AS(parse_command({"extract", "family:g1:3", "--mode", "dense"}), UsageError);
  CHECK_THROWS_AS(parse_command({"analyze", "family:g1:x"}), UsageError);
  CHECK_THROWS_AS(parse_command({"verify", "--suite", "nope"}), UsageError);
  CHECK_THROWS_AS(parse_command({"verify", "--suite", "all", "--input", "x.json"}), UsageError);
}

TEST_CASE("exit codes") {
  CHECK(run({"gen", "--family", "nope"}).code == 2);
  CHECK(run({"analyze", temp_path("missing.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const std::string bad = temp_path("bad.json");
  write_file(bad, "{not json");
  CHECK(run({"analyze", bad}).code == 2);
  CHECK(run({"extract", "--mode", "sparse", "family:k:3"}).code == 2);
}

TEST_CASE("analyze reports P4") {
  const Run r = run({"analyze", "family:g2:2", "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["prime"] == true);
  CHECK(j["point_determining"] == true);
  CHECK(j["lattice_size"] == oracle::neighbourhood_lattice(gen_graph(FamilySpec{Family::g2, 2})).size());
  CHECK(j["lattice_size"] == 6);
  CHECK(j["clique_number"] == 2);
  CHECK(j["independence_number"] == 2);
  CHECK(j["bipartite"] == true);
  CHECK(j["prefixes"]["g2"] == 2);
  const Run text = run({"analyze", "family:g2:2"});
  CHECK(text.out.find("prime: true") != std::string::npos);
}

TEST_CASE("gen to file to analyze") {
  const std::string path = temp_path("g1.json");
  REQUIRE(run({"gen", "--family", "g1", "--n", "5", "-o", path}).code == 0);
  CHECK(graph_from_json(read_json_file(path)) == gen_graph(FamilySpec{Family::g1, 5}));
  CHECK(run({"analyze", path, "--json"}).out == run({"analyze", "family:g1:5", "--json"}).out);
  const Run dot = run({"gen", "--family", "q1", "--n", "3", "--dual", "--format", "dot"});
  CHECK(dot.out.rfind("digraph P", 0) == 0);
  CHECK(run({"gen", "--family", "gab:3:complement"}).out == to_json(gen_graph(FamilySpec{Family::gab, 3, true})).dump() + "\n");
}

TEST_CASE("JSON output of every verb re-parses") {
  const std::vector<std::vector<std::string>> commands{
      {"gen", "--family", "g0", "--n", "3", "--json"},
      {"analyze", "family:q3:3", "--json"},
      {"embed", "--pattern", "family:g2:2", "--target", "family:g3:3", "--json"},
      {"orient", "family:g2:2", "--json"},
      {"dim", "family:q3:4", "--max", "3", "--json"},
      {"lattice", "family:g1:3", "--json"},
      {"extract", "--mode", "bipartite", "family:g1:6", "--json"},
      {"verify", "--suite", "q3_dimension", "--json"},
  };
  for (const auto& c : commands) {
    CAPTURE(c[0]);
    const Run r = run(c);
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(Json::parse(j.dump()) == j);
  }
  CHECK(Json::parse(run({"orient", "family:g2:2", "--json"}).out)["count"] == 2);
  CHECK(Json::parse(run({"dim", "family:q3:4", "--json"}).out)["dimension"] == 3);
  const Json lattice = Json::parse(run({"lattice", "family:g1:3"}).out);
  CHECK(lattice_from_json(lattice).size() == neighborhood_lattice(gen_graph(FamilySpec{Family::g1, 3})).size());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "galois_dual", "--samples", "300", "--seed", "5", "--json"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> sharded = args;
  sharded.insert(sharded.end(), {"--jobs", "3"});
  CHECK(run(sharded).out == run(args).out);
}

TEST_CASE("violation payloads replay") {
  const Json payload{{"graph", to_json(gen_graph(FamilySpec{Family::g0, 12}))},
                     {"mode", "bipartite"},
                     {"expect", {{"kind", "G1_PREFIX"}, {"min_m", 3}}}};
  const auto direct = check_instance("extraction_sound", payload);
  REQUIRE(direct.has_value());
  const std::string path = temp_path("violation.json");
  write_file(path, payload.dump());
  const Run r = run({"verify", "--suite", "extraction_sound", "--input", path, "--json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["violation"] == *direct);
  const Json ok{{"graph", to_json(gen_graph(FamilySpec{Family::g2, 2}))}, {"mode", "both"}};
  write_file(path, ok.dump());
  CHECK(run({"verify", "--suite", "extraction_sound", "--input", path}).code == 0);
}

TEST_CASE("verify all at max-n 6 exits 0") {
  const Run r = run({"verify", "--suite", "all", "--max-n", "6", "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == static_cast<long>(suite_ids().size()));
}
