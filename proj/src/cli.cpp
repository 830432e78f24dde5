#include "primegraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <variant>

#include "primegraph/embed.hpp"
#include "primegraph/extract.hpp"
#include "primegraph/families.hpp"
#include "primegraph/io.hpp"
#include "primegraph/lattice.hpp"
#include "primegraph/modular.hpp"
#include "primegraph/orientation.hpp"
#include "primegraph/verify.hpp"

namespace primegraph {

namespace {

using Structure = std::variant<Graph, Poset, IncidenceStructure, Lattice>;

constexpr std::string_view kInlinePrefix = "family:";

bool is_inline(const std::string& source) { return source.rfind(kInlinePrefix, 0) == 0; }

void check_source(const std::string& flag, const std::string& source) {
  if (!is_inline(source)) return;
  try {
    parse_family_spec(source);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Structure load(const std::string& source) {
  if (is_inline(source)) {
    const FamilySpec spec = parse_family_spec(source);
    if (is_graph_family(spec.family)) return gen_graph(spec);
    return gen_poset(spec);
  }
  const Json j = read_json_file(source);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw std::invalid_argument(source + ": missing \"type\"");
  const std::string type = j["type"];
  if (type == "graph") return graph_from_json(j);
  if (type == "poset") return poset_from_json(j);
  if (type == "incidence") return incidence_from_json(j);
  if (type == "lattice") return lattice_from_json(j);
  throw std::invalid_argument(source + ": unknown type \"" + type + "\"");
}

template <class T>
T load_as(const std::string& source, const char* what) {
  Structure s = load(source);
  if (auto* v = std::get_if<T>(&s)) return std::move(*v);
  throw std::invalid_argument(source + ": expected a " + what);
}

Json members(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json optional_members(const std::optional<VertexSet>& s) { return s ? members(*s) : Json(nullptr); }

void write(const Command& cmd, std::ostream& out, const std::string& text) {
  if (cmd.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cmd.output);
  if (!file) throw std::runtime_error("cannot write " + cmd.output);
  file << text;
}

// Flat "key: value" lines; nested objects use dotted keys.
void text_lines(const Json& j, const std::string& prefix, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      text_lines(*it, key, out);
    } else {
      out += key + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
    }
  }
}

void report(const Command& cmd, std::ostream& out, const Json& j) {
  if (cmd.json) {
    write(cmd, out, j.dump(2) + "\n");
  } else {
    std::string text;
    text_lines(j, "", text);
    write(cmd, out, text);
  }
}

void emit_structure(const Command& cmd, std::ostream& out, const Json& j, const std::string& dot) {
  write(cmd, out, !cmd.json && cmd.format == "dot" ? dot : j.dump() + "\n");
}

HomogenizeMode homogenize_mode(const std::string& name) {
  if (name == "greedy") return HomogenizeMode::greedy;
  if (name == "exact") return HomogenizeMode::exact;
  return HomogenizeMode::automatic;
}

// Two-colouring with the least uncoloured vertex of each component on side 0.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> halves;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? halves.first : halves.second).push_back(v);
  return halves;
}

Json primality_json(const PrimalityReport& r) {
  return Json{{"prime", r.prime},
              {"indecomposable", r.indecomposable},
              {"autonomous_witness", optional_members(r.witness)}};
}

Json analyze_graph(const Graph& g) {
  Json j{{"type", "graph"}, {"n", g.order()}, {"edges", g.edge_count()}};
  j.update(primality_json(is_prime_graph(g)));
  j["point_determining"] = is_point_determining(g);
  j["connected"] = is_connected(g);
  const ExtremalSets ext = extremal_sets(g);
  j["clique_number"] = ext.clique.size();
  j["independence_number"] = ext.independent.size();
  const Lattice l = neighborhood_lattice(g);
  j["lattice_size"] = l.size();
  j["longest_chain"] = longest_chain(l).size();
  const auto halves = bipartition(g);
  j["bipartite"] = halves.has_value();
  if (halves) {
    IncidenceStructure r(halves->first.size(), halves->second.size());
    for (std::size_t x = 0; x < halves->first.size(); ++x)
      for (std::size_t y = 0; y < halves->second.size(); ++y)
        r.relate(x, y, g.adjacent(halves->first[x], halves->second[y]));
    j["ferrers"] = is_ferrers(r);
  } else {
    j["ferrers"] = nullptr;
  }
  Json prefixes = Json::object();
  for (Family f : graph_families()) {
    const PrefixResult p = largest_family_prefix(g, FamilySpec{f}, g.order());
    prefixes[family_name(f)] = p.status == SearchStatus::inconclusive ? Json{{"at_least", p.m}} : Json(p.m);
  }
  j["prefixes"] = prefixes;
  return j;
}

Json analyze_poset(const Poset& p) {
  Json j{{"type", "poset"}, {"n", p.size()}};
  j.update(primality_json(is_prime_poset(p)));
  j["comparability_edges"] = comparability_graph(p).edge_count();
  try {
    const auto d = order_dimension(p);
    j["dimension"] = d.dimension ? Json(*d.dimension) : Json("> 4");
  } catch (const GuardExceeded&) {
    j["dimension"] = nullptr;
  }
  return j;
}

Json analyze_lattice(const Lattice& l) {
  return Json{{"type", "lattice"},
              {"universe", l.universe_size},
              {"size", l.size()},
              {"longest_chain", longest_chain(l).size()},
              {"chain", l.is_chain()}};
}

int run_gen(const Command& cmd, std::ostream& out) {
  FamilySpec spec = parse_family_spec(cmd.family.find(':') == std::string::npos
                                          ? cmd.family + ":" + std::to_string(cmd.n)
                                          : cmd.family);
  spec.complemented = spec.complemented || cmd.complement;
  spec.dualized = spec.dualized || cmd.dual;
  if (is_graph_family(spec.family)) {
    const Graph g = gen_graph(spec);
    emit_structure(cmd, out, to_json(g), to_dot(g));
  } else {
    const Poset p = gen_poset(spec);
    emit_structure(cmd, out, to_json(p), to_dot(p));
  }
  return 0;
}

int run_analyze(const Command& cmd, std::ostream& out) {
  const Structure s = load(cmd.input);
  Json j;
  if (auto* g = std::get_if<Graph>(&s)) {
    j = analyze_graph(*g);
  } else if (auto* p = std::get_if<Poset>(&s)) {
    j = analyze_poset(*p);
  } else if (auto* r = std::get_if<IncidenceStructure>(&s)) {
    j = analyze_lattice(galois_lattice(*r));
    j["type"] = "incidence";
    j["ferrers"] = is_ferrers(*r);
  } else {
    j = analyze_lattice(std::get<Lattice>(s));
  }
  report(cmd, out, j);
  return 0;
}

int run_embed(const Command& cmd, std::ostream& out) {
  const Graph h = load_as<Graph>(cmd.pattern, "graph");
  const Graph g = load_as<Graph>(cmd.target, "graph");
  const auto r = induced_embedding(h, g, cmd.max_nodes);
  report(cmd, out, Json{{"status", to_string(r.status)}, {"map", r.value ? Json(*r.value) : Json(nullptr)}, {"nodes", r.nodes}});
  return 0;
}

int run_orient(const Command& cmd, std::ostream& out) {
  OrientationOptions o;
  o.force = cmd.force;
  o.limit = cmd.limit;
  const auto set = transitive_orientations(load_as<Graph>(cmd.input, "graph"), o);
  Json all = Json::array();
  for (const Poset& p : set.orientations) all.push_back(to_json(p));
  if (cmd.json) {
    report(cmd, out, Json{{"count", set.orientations.size()}, {"orientations", all}});
  } else {
    std::string text = "orientations: " + std::to_string(set.orientations.size()) + "\n";
    for (const auto& p : all) text += p.dump() + "\n";
    write(cmd, out, text);
  }
  return 0;
}

int run_dim(const Command& cmd, std::ostream& out) {
  DimensionOptions o;
  o.k_max = cmd.max_k;
  const auto r = order_dimension(load_as<Poset>(cmd.input, "poset"), o);
  report(cmd, out, Json{{"dimension", r.dimension ? Json(*r.dimension) : Json(nullptr)},
                        {"k_max", cmd.max_k},
                        {"realizer", r.realizer}});
  return 0;
}

int run_lattice(const Command& cmd, std::ostream& out) {
  const Structure s = load(cmd.input);
  Lattice l;
  if (auto* g = std::get_if<Graph>(&s)) {
    l = neighborhood_lattice(*g);
  } else if (auto* r = std::get_if<IncidenceStructure>(&s)) {
    l = galois_lattice(*r);
  } else if (auto* x = std::get_if<Lattice>(&s)) {
    l = *x;
  } else {
    throw std::invalid_argument(cmd.input + ": expected a graph, incidence structure or lattice");
  }
  emit_structure(cmd, out, to_json(l), to_dot(l));
  return 0;
}

int run_extract(const Command& cmd, std::ostream& out) {
  const Graph g = load_as<Graph>(cmd.input, "graph");
  const HomogenizeMode mode = homogenize_mode(cmd.homogenize);
  const ExtractionResult r =
      cmd.mode == "bipartite" ? extract_g0_or_g1(g, mode) : extract_g2_or_g3(g, cmd.threshold, mode);
  report(cmd, out, Json{{"kind", to_string(r.kind)},
                        {"m", r.m},
                        {"witness", r.witness},
                        {"chain_length", r.chain_length},
                        {"occupied_blocks", r.occupied_blocks},
                        {"anchor", optional_members(r.anchor)},
                        {"clique", optional_members(r.clique)},
                        {"note", r.note}});
  return 0;
}

int run_verify(const Command& cmd, std::ostream& out) {
  if (!cmd.replay.empty()) {
    const auto violation = check_instance(cmd.suite, read_json_file(cmd.replay));
    if (cmd.json) {
      report(cmd, out, Json{{"suite", cmd.suite}, {"violation", violation ? Json(*violation) : Json(nullptr)}});
    } else {
      write(cmd, out, violation ? "[FAIL] " + cmd.suite + ": " + *violation + "\n" : "[PASS] " + cmd.suite + "\n");
    }
    return violation ? 1 : 0;
  }

  SuiteParams params;
  params.max_n = cmd.max_n;
  params.seed = cmd.seed;
  params.samples = cmd.samples;
  params.jobs = cmd.jobs;
  const std::vector<std::string> ids = cmd.suite == "all" ? suite_ids() : std::vector<std::string>{cmd.suite};

  bool passed = true;
  Json reports = Json::array();
  std::string text;
  for (const auto& id : ids) {
    const SuiteReport r = run_suite(id, params);
    passed = passed && r.passed();
    reports.push_back(r.to_json(cmd.timing));
    text += (r.passed() ? "[PASS] " : "[FAIL] ") + id + " instances=" + std::to_string(r.instances) +
            " violations=" + std::to_string(r.violations.size());
    if (cmd.timing) text += " seconds=" + std::to_string(r.wall_seconds);
    text += "\n";
    for (const auto& v : r.violations) text += "  #" + std::to_string(v.index) + " " + v.message + ": " + v.input.dump() + "\n";
  }
  if (cmd.json) {
    write(cmd, out, Json{{"suites", reports}, {"passed", passed}}.dump(2) + "\n");
  } else {
    write(cmd, out, text);
  }
  return passed ? 0 : 1;
}

}  // namespace

std::string to_string(Verb verb) {
  switch (verb) {
    case Verb::gen:
      return "gen";
    case Verb::analyze:
      return "analyze";
    case Verb::embed:
      return "embed";
    case Verb::orient:
      return "orient";
    case Verb::dim:
      return "dim";
    case Verb::lattice:
      return "lattice";
    case Verb::extract:
      return "extract";
    case Verb::verify:
      return "verify";
  }
  return "?";
}

Command parse_command(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Prime graphs, posets and neighbourhood lattices", "primegraph"};
  app.require_subcommand(1, 1);

  auto common = [&cmd](CLI::App* sub, bool with_format) {
    sub->add_flag("--json", cmd.json, "Machine-readable JSON output");
    sub->add_option("-o,--output", cmd.output, "Write to a file instead of stdout");
    if (with_format)
      sub->add_option("--format", cmd.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("--family", cmd.family, "Family name or full spec such as g1:8")->required();
  gen->add_option("--n", cmd.n, "Truncation size")->check(CLI::PositiveNumber);
  gen->add_flag("--complement", cmd.complement, "Complement a graph family");
  gen->add_flag("--dual", cmd.dual, "Dualize a poset family");
  common(gen, true);

  auto* analyze = app.add_subcommand("analyze", "Report structural invariants");
  analyze->add_option("input", cmd.input, "Structure file or family:<name>:<n>")->required();
  common(analyze, false);

  auto* embed = app.add_subcommand("embed", "Search for an induced embedding");
  embed->add_option("--pattern", cmd.pattern, "Pattern graph")->required();
  embed->add_option("--target", cmd.target, "Target graph")->required();
  embed->add_option("--max-nodes", cmd.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  common(embed, false);

  auto* orient = app.add_subcommand("orient", "Enumerate transitive orientations");
  orient->add_option("input", cmd.input, "Graph file or family spec")->required();
  orient->add_flag("--force", cmd.force, "Lift the edge-count guard");
  orient->add_option("--limit", cmd.limit, "Stop after this many orientations (0: all)");
  common(orient, false);

  auto* dim = app.add_subcommand("dim", "Order dimension up to a bound");
  dim->add_option("input", cmd.input, "Poset file or family spec")->required();
  dim->add_option("--max", cmd.max_k, "Largest dimension tried")->check(CLI::Range(1, 4));
  common(dim, false);

  auto* lattice = app.add_subcommand("lattice", "Neighbourhood or Galois lattice");
  lattice->add_option("input", cmd.input, "Graph, incidence or lattice file, or family spec")->required();
  common(lattice, true);

  auto* extract = app.add_subcommand("extract", "Extract a G0/G1 or G2/G3 prefix");
  extract->add_option("input", cmd.input, "Graph file or family spec")->required();
  extract->add_option("--mode", cmd.mode, "bipartite (G0/G1) or sparse (G2/G3)")
      ->required()
      ->check(CLI::IsMember({"bipartite", "sparse"}));
  extract->add_option("--threshold", cmd.threshold, "Finite threshold s for sparse mode")->check(CLI::PositiveNumber);
  extract->add_option("--homogenize", cmd.homogenize, "Homogenization mode")
      ->check(CLI::IsMember({"auto", "greedy", "exact"}));
  common(extract, false);

  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", cmd.suite, "Suite id or all")->required();
  verify->add_option("--max-n", cmd.max_n, "Cap on instance size (0: suite default)");
  verify->add_option("--seed", cmd.seed, "Seed for randomized suites");
  verify->add_option("--samples", cmd.samples, "Samples for randomized suites")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cmd.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--input", cmd.replay, "Re-check one violation payload");
  verify->add_flag("--timing", cmd.timing, "Report wall time per suite");
  common(verify, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    throw HelpRequested(target->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const std::vector<std::pair<const char*, Verb>> verbs{
      {"gen", Verb::gen},         {"analyze", Verb::analyze}, {"embed", Verb::embed},
      {"orient", Verb::orient},   {"dim", Verb::dim},         {"lattice", Verb::lattice},
      {"extract", Verb::extract}, {"verify", Verb::verify}};
  for (const auto& [name, v] : verbs)
    if (verb == name) cmd.verb = v;

  switch (cmd.verb) {
    case Verb::gen: {
      FamilySpec spec;
      try {
        if (cmd.family.find(':') != std::string::npos) {
          spec = parse_family_spec(cmd.family);
        } else {
          spec.family = parse_family(cmd.family);
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--family: ") + e.what());
      }
      if (cmd.family.find(':') == std::string::npos && cmd.n == 0) throw UsageError("--n is required");
      if (cmd.complement && !is_graph_family(spec.family))
        throw UsageError("--complement applies to graph families only");
      if (cmd.dual && is_graph_family(spec.family)) throw UsageError("--dual applies to poset families only");
      if (cmd.family.find(':') == std::string::npos && 2 * cmd.n + 2 > VertexSet::capacity)
        throw UsageError("--n: size " + std::to_string(cmd.n) + " exceeds vertex capacity");
      break;
    }
    case Verb::embed:
      check_source("--pattern", cmd.pattern);
      check_source("--target", cmd.target);
      break;
    case Verb::verify:
      if (cmd.suite != "all" && !is_suite(cmd.suite)) throw UsageError("--suite: unknown suite '" + cmd.suite + "'");
      if (!cmd.replay.empty() && cmd.suite == "all") throw UsageError("--input needs a single --suite");
      break;
    default:
      check_source("input", cmd.input);
  }
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::gen:
        return run_gen(cmd, out);
      case Verb::analyze:
        return run_analyze(cmd, out);
      case Verb::embed:
        return run_embed(cmd, out);
      case Verb::orient:
        return run_orient(cmd, out);
      case Verb::dim:
        return run_dim(cmd, out);
      case Verb::lattice:
        return run_lattice(cmd, out);
      case Verb::extract:
        return run_extract(cmd, out);
      case Verb::verify:
        return run_verify(cmd, out);
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_command(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }
  return execute(cmd, out, err);
}

}  // namespace primegraph
