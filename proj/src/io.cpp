#include "primegraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace primegraph {

namespace {

Json pairs(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

void expect_type(const Json& j, const char* type) {
  if (!j.is_object()) throw std::invalid_argument(std::string("expected a JSON object of type ") + type);
  if (!j.contains("type") || j["type"] != type)
    throw std::invalid_argument(std::string("expected \"type\": \"") + type + "\"");
}

std::size_t size_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a non-negative integer");
  const auto value = j[key].get<std::size_t>();
  if (value > VertexSet::capacity)
    throw std::invalid_argument(std::string("field \"") + key + "\" exceeds " + std::to_string(VertexSet::capacity));
  return value;
}

std::vector<Edge> pair_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
  std::vector<Edge> out;
  for (const Json& item : j[key]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      throw std::invalid_argument(std::string("entries of \"") + key + "\" must be pairs of non-negative integers");
    out.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
  }
  return out;
}

VertexSet member_set(const Json& item, std::size_t universe) {
  if (!item.is_array()) throw std::invalid_argument("lattice elements must be arrays of members");
  VertexSet s;
  for (const Json& v : item) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= universe)
      throw std::invalid_argument("lattice member out of range");
    s.insert(v.get<Vertex>());
  }
  return s;
}

void check_range(const std::vector<Edge>& pairs, std::size_t n) {
  for (auto [u, v] : pairs)
    if (u >= n || v >= n) throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
}

std::string set_label(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

Json to_json(const Graph& g) { return Json{{"type", "graph"}, {"n", g.order()}, {"edges", pairs(g.edges())}}; }

Json to_json(const Poset& p) { return Json{{"type", "poset"}, {"n", p.size()}, {"lt", pairs(p.relation())}}; }

Json to_json(const IncidenceStructure& r) {
  std::vector<Edge> rho;
  for (Vertex x = 0; x < r.e_size(); ++x)
    for (Vertex y : r.row(x)) rho.emplace_back(x, y);
  return Json{{"type", "incidence"}, {"e", r.e_size()}, {"f", r.f_size()}, {"rho", pairs(rho)}};
}

Json to_json(const Lattice& l) {
  Json elements = Json::array();
  for (const auto& e : l.elements) elements.push_back(e.members());
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers) covers.push_back({lo, hi});
  return Json{{"type", "lattice"}, {"universe", l.universe_size}, {"elements", elements}, {"covers", covers}};
}

Graph graph_from_json(const Json& j) {
  expect_type(j, "graph");
  const std::size_t n = size_field(j, "n");
  const auto edges = pair_list(j, "edges");
  check_range(edges, n);
  return Graph::from_edges(n, edges);
}

Poset poset_from_json(const Json& j) {
  expect_type(j, "poset");
  const std::size_t n = size_field(j, "n");
  const auto lt = pair_list(j, "lt");
  check_range(lt, n);
  return Poset::from_relation(n, lt);
}

IncidenceStructure incidence_from_json(const Json& j) {
  expect_type(j, "incidence");
  IncidenceStructure r(size_field(j, "e"), size_field(j, "f"));
  for (auto [x, y] : pair_list(j, "rho")) {
    if (x >= r.e_size() || y >= r.f_size()) throw std::invalid_argument("incidence pair out of range");
    r.relate(x, y);
  }
  return r;
}

Lattice lattice_from_json(const Json& j) {
  expect_type(j, "lattice");
  const std::size_t universe = size_field(j, "universe");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw std::invalid_argument("field \"elements\" must be an array");
  std::vector<VertexSet> family;
  for (const Json& item : j["elements"]) family.push_back(member_set(item, universe));
  const std::size_t listed = family.size();
  Lattice l = make_lattice(universe, std::move(family));
  if (l.size() != listed) throw std::invalid_argument("lattice elements are not distinct");
  if (!l.index_of(VertexSet::range(universe))) throw std::invalid_argument("lattice does not contain its universe");
  if (!is_intersection_closed(l)) throw std::invalid_argument("lattice is not closed under intersection");
  if (j.contains("covers")) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (auto [lo, hi] : pair_list(j, "covers")) covers.emplace_back(lo, hi);
    std::sort(covers.begin(), covers.end());
    if (covers != l.covers) throw std::invalid_argument("listed covers do not match the elements");
  }
  return l;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph P {\n  rankdir=BT;\n";
  for (Vertex v = 0; v < p.size(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : p.covers()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Lattice& l) {
  std::ostringstream out;
  out << "digraph L {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.size(); ++i) out << "  " << i << " [label=\"" << set_label(l.elements[i]) << "\"];\n";
  for (auto [lo, hi] : l.covers) out << "  " << lo << " -> " << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace primegraph
