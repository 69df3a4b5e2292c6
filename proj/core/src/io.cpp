#include "sfdt/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sfdt {

namespace {

// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

template <class... T>
void parse_fields(const std::string& line, T&... out) {
  std::istringstream ss(line);
  if (!((ss >> out) && ...)) throw FormatError("cannot parse line: " + line);
  std::string rest;
  if (ss >> rest) throw FormatError("trailing data on line: " + line);
}

std::pair<int, int> read_header(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw FormatError("missing `n m` header");
  int n = 0, m = 0;
  parse_fields(line, n, m);
  if (n < 0 || m < 0) throw FormatError("negative size in header");
  return {n, m};
}

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field `") + key + "`");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad field `") + key + "`: " + e.what());
  }
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto [n, m] = read_header(in);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) throw FormatError("expected " + std::to_string(m) + " edges");
    int u = 0, v = 0;
    parse_fields(line, u, v);
    edges.emplace_back(u, v);
  }
  if (next_content_line(in, line)) throw FormatError("more edge lines than declared");
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SignedGraph read_signed_graph(std::istream& in) {
  auto [n, m] = read_header(in);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> signs;
  std::string line;
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) throw FormatError("expected " + std::to_string(m) + " signed edges");
    int u = 0, v = 0, s = 0;
    parse_fields(line, u, v, s);
    if (s != 1 && s != -1) throw FormatError("edge sign must be +1 or -1: " + line);
    edges.emplace_back(u, v);
    signs.push_back(s);
  }
  if (next_content_line(in, line)) throw FormatError("more edge lines than declared");
  SignedGraph sg{Graph(n, edges), std::vector<int>(m)};
  for (int i = 0; i < m; ++i) sg.sign[sg.base.edge_id(edges[i].first, edges[i].second)] = signs[i];
  return sg;
}

ListAssignment read_list_assignment(std::istream& in, int n, int palette) {
  ListAssignment la;
  la.lists.assign(n, {});
  std::vector<char> seen(n, 0);
  int largest = 0;
  std::string line;
  while (next_content_line(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError("list line lacks `:`: " + line);
    int v = 0;
    parse_fields(line.substr(0, colon), v);
    if (v < 0 || v >= n) throw FormatError("list for unknown vertex: " + line);
    if (seen[v]) throw FormatError("second list for vertex " + std::to_string(v));
    seen[v] = 1;
    std::istringstream ss(line.substr(colon + 1));
    std::string tok;
    while (ss >> tok) {
      int c = 0;
      try {
        std::size_t used = 0;
        c = std::stoi(tok, &used);
        if (used != tok.size()) throw FormatError("bad color: " + tok);
      } catch (const std::logic_error&) {
        throw FormatError("bad color: " + tok);
      }
      if (c < 1) throw FormatError("colors are 1-based: " + line);
      largest = std::max(largest, c);
      la.lists[v].push_back(c - 1);
    }
    std::sort(la.lists[v].begin(), la.lists[v].end());
    if (std::adjacent_find(la.lists[v].begin(), la.lists[v].end()) != la.lists[v].end()) {
      throw FormatError("repeated color: " + line);
    }
  }
  la.palette = palette > 0 ? palette : largest;
  if (largest > la.palette) throw FormatError("color exceeds palette size");
  if (la.palette == 0) throw FormatError("empty palette");
  return la;
}

Json cover_to_json(const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  Json j;
  j["n"] = g.order();
  j["kappa"] = c.kappa();
  j["edges"] = Json::array();
  j["matchings"] = Json::object();
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    j["edges"].push_back({ed.u, ed.v});
    Json pairs = Json::array();
    for (auto [p, q] : c.matching(e).pairs()) pairs.push_back({p + 1, q + 1});
    if (!pairs.empty()) j["matchings"][std::to_string(ed.u) + "-" + std::to_string(ed.v)] = std::move(pairs);
  }
  j["f"] = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int q = 0; q < c.kappa(); ++q) {
      if (f(v, q) != 0) j["f"].push_back({v, q + 1, f(v, q)});
    }
  }
  return j;
}

ValuedCover cover_from_json(const Json& j) {
  const int n = get_field<int>(j, "n");
  const int kappa = get_field<int>(j, "kappa");
  if (n < 0) throw FormatError("n must be nonnegative");
  if (kappa < 1) throw FormatError("kappa must be at least 1");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      auto pr = as<std::array<int, 2>>(e, "edge");
      edges.emplace_back(pr[0], pr[1]);
    }
  }
  Graph g;
  try {
    g = Graph(n, edges);
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
  MatchingSpec spec;
  if (j.contains("matchings")) {
    if (!j.at("matchings").is_object()) throw FormatError("`matchings` must be an object");
    for (const auto& [key, pairs] : j.at("matchings").items()) {
      int u = 0, v = 0;
      char dash = 0;
      std::istringstream ss(key);
      std::string rest;
      if (!(ss >> u >> dash >> v) || dash != '-' || (ss >> rest)) throw FormatError("bad matching key `" + key + "`");
      if (u >= v) throw FormatError("matching key `" + key + "` must have u < v");
      std::vector<std::pair<int, int>> ps;
      for (const auto& p : pairs) {
        auto pr = as<std::array<int, 2>>(p, "matching pair");
        ps.emplace_back(pr[0] - 1, pr[1] - 1);
      }
      spec[{u, v}] = std::move(ps);
    }
  }
  Cover c;
  try {
    c = make_cover(g, kappa, spec);
  } catch (const CoverError& e) {
    throw FormatError(e.what());
  }
  ValueMap f(n, kappa);
  std::vector<char> set(static_cast<std::size_t>(n) * kappa, 0);
  if (j.contains("f")) {
    for (const auto& entry : j.at("f")) {
      auto t = as<std::array<int, 3>>(entry, "f entry");
      const int v = t[0], q = t[1] - 1, value = t[2];
      if (v < 0 || v >= n || q < 0 || q >= kappa) throw FormatError("f entry outside the cover");
      if (value < 0) throw FormatError("f values must be nonnegative");
      if (set[v * kappa + q]++) throw FormatError("repeated f entry");
      f.set(v, q, value);
    }
  }
  return {std::move(c), std::move(f)};
}

Json transversal_to_json(const Transversal& r) {
  Json picks = Json::array();
  for (int q : r.picks) picks.push_back(q + 1);
  return picks;
}

Transversal transversal_from_json(const Json& j, int kappa) {
  Transversal r;
  for (const auto& x : j) {
    int q = as<int>(x, "pick") - 1;
    if (q < 0 || q >= kappa) throw FormatError("pick outside fiber");
    r.picks.push_back(q);
  }
  return r;
}

Json building_to_json(const BuildingWitness& w) {
  Json j;
  j["kind"] = std::string(to_string(w.kind));
  j["layers"] = Json::array();
  for (const auto& layer : w.layers) {
    j["layers"].push_back(transversal_to_json(Transversal{layer}));
  }
  if (!w.layer_values.empty()) j["layer_values"] = w.layer_values;
  return j;
}

BuildingWitness building_from_json(const Json& j) {
  BuildingWitness w;
  auto kind = parse_building_kind(get_field<std::string>(j, "kind"));
  if (!kind) throw FormatError("unknown building kind");
  w.kind = *kind;
  for (const auto& layer : get_field<std::vector<std::vector<int>>>(j, "layers")) {
    std::vector<int> picks;
    for (int q : layer) picks.push_back(q - 1);
    w.layers.push_back(std::move(picks));
  }
  if (j.contains("layer_values")) w.layer_values = get_field<std::vector<int>>(j, "layer_values");
  return w;
}

Json construction_tree_to_json(const ConstructionTree& t) {
  Json j;
  j["leaves"] = Json::array();
  for (const auto& leaf : t.leaves) {
    Json l;
    l["vertices"] = leaf.vertices;
    l["cover"] = cover_to_json(leaf.cover, leaf.values);
    l["building"] = building_to_json(leaf.building);
    j["leaves"].push_back(std::move(l));
  }
  j["gluings"] = Json::array();
  for (const auto& s : t.gluings) {
    j["gluings"].push_back({{"cut_vertex", s.cut_vertex},
                            {"leaf", s.leaf},
                            {"accumulated_share", s.accumulated_share},
                            {"leaf_share", s.leaf_share}});
  }
  return j;
}

ConstructionTree construction_tree_from_json(const Json& j) {
  ConstructionTree t;
  for (const auto& l : get_field<Json>(j, "leaves")) {
    auto vc = cover_from_json(get_field<Json>(l, "cover"));
    t.leaves.push_back({get_field<std::vector<Vertex>>(l, "vertices"), std::move(vc.cover), std::move(vc.values),
                        building_from_json(get_field<Json>(l, "building"))});
  }
  for (const auto& s : get_field<Json>(j, "gluings")) {
    t.gluings.push_back({get_field<Vertex>(s, "cut_vertex"), get_field<int>(s, "leaf"),
                         get_field<std::vector<int>>(s, "accumulated_share"),
                         get_field<std::vector<int>>(s, "leaf_share")});
  }
  return t;
}

Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sfdt
