#include <map>
#include <sstream>

#include "pirank/adjunction.hpp"
#include "pirank/error.hpp"
#include "pirank/text_util.hpp"

namespace pirank {

namespace {

constexpr const char* kGraphs[] = {"omega", "gamma", "s", "p"};

struct MapSpec {
  const char* name;
  int domain;    // index into kGraphs
  int codomain;
};
constexpr MapSpec kMaps[] = {{"h", 1, 0}, {"w", 2, 0}, {"lambda", 3, 1}, {"sigma", 3, 2}};

struct PartialMap {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  bool mentioned = false;
};

std::pair<char, long long> cell_token(std::string_view token, int line_number) {
  if (token.size() < 2 || (token[0] != 'v' && token[0] != 'e')) {
    text::malformed(line_number, "expected a cell like v3 or e0, got '" + std::string(token) + "'");
  }
  return {token[0], text::integer(token.substr(1), line_number)};
}

GraphMorphism by_labels(const LabeledGraph& domain, const LabeledGraph& omega, const char* name) {
  if (omega.num_vertices() != 1) {
    fail(ErrorKind::malformed_input, std::string("map ") + name + " is missing and omega is not a rose");
  }
  std::map<int, int> edge_of_label;
  for (int e = 0; e < omega.num_edges(); ++e) {
    if (!edge_of_label.emplace(omega.edge(e).label, e).second || omega.edge(e).label == 0) {
      fail(ErrorKind::malformed_input, std::string("map ") + name + " is missing and omega's labels do not name its edges");
    }
  }
  GraphMorphism f;
  f.vertex_map.assign(domain.num_vertices(), 0);
  for (const Edge& e : domain.edges()) {
    auto it = edge_of_label.find(e.label);
    if (it == edge_of_label.end()) fail(ErrorKind::malformed_input, std::string("map ") + name + ": unknown label");
    f.edge_map.push_back(it->second);
  }
  return f;
}

}  // namespace

AdjunctionInstance parse_instance(std::string_view input) {
  GraphTextBuilder builders[4];
  bool declared[4] = {};
  int current = -1;
  struct MapLine {
    int map;
    char kind;
    long long from;
    long long to;
    int line_number;
  };
  std::vector<MapLine> map_lines;
  text::for_each_line(input, [&](std::string_view line, int line_number) {
    const auto tokens = text::split(line);
    if (tokens[0] == "graph") {
      if (tokens.size() != 2) text::malformed(line_number, "expected `graph <omega|gamma|s|p>`");
      current = -1;
      for (int i = 0; i < 4; ++i) {
        if (tokens[1] == kGraphs[i]) current = i;
      }
      if (current < 0) text::malformed(line_number, "unknown graph '" + std::string(tokens[1]) + "'");
      if (declared[current]) text::malformed(line_number, "graph " + std::string(tokens[1]) + " declared twice");
      declared[current] = true;
      return;
    }
    if (tokens[0] == "map") {
      if (tokens.size() != 5 || tokens[3] != "->") text::malformed(line_number, "expected `map <name> <cell> -> <cell>`");
      int which = -1;
      for (int i = 0; i < 4; ++i) {
        if (tokens[1] == kMaps[i].name) which = i;
      }
      if (which < 0) text::malformed(line_number, "unknown map '" + std::string(tokens[1]) + "'");
      const auto [kind, from] = cell_token(tokens[2], line_number);
      const auto [kind_to, to] = cell_token(tokens[4], line_number);
      if (kind != kind_to) text::malformed(line_number, "map sends a vertex to an edge or back");
      map_lines.push_back({which, kind, from, to, line_number});
      return;
    }
    if (current < 0) text::malformed(line_number, "graph line outside a `graph` block");
    if (!builders[current].consume(line, line_number)) {
      text::malformed(line_number, "unrecognised line '" + std::string(line) + "'");
    }
  });
  for (int i = 0; i < 4; ++i) {
    if (!declared[i]) fail(ErrorKind::malformed_input, std::string("instance lacks graph ") + kGraphs[i]);
  }

  PartialMap maps[4];
  for (int i = 0; i < 4; ++i) {
    maps[i].vertex_map.assign(builders[kMaps[i].domain].graph.num_vertices(), -1);
    maps[i].edge_map.assign(builders[kMaps[i].domain].graph.num_edges(), -1);
  }
  for (const MapLine& m : map_lines) {
    const GraphTextBuilder& dom = builders[kMaps[m.map].domain];
    const GraphTextBuilder& cod = builders[kMaps[m.map].codomain];
    PartialMap& pm = maps[m.map];
    pm.mentioned = true;
    int& slot = m.kind == 'v' ? pm.vertex_map[dom.vertex(m.from, m.line_number)] : pm.edge_map[dom.edge(m.from, m.line_number)];
    if (slot >= 0) text::malformed(m.line_number, "cell mapped twice");
    slot = m.kind == 'v' ? cod.vertex(m.to, m.line_number) : cod.edge(m.to, m.line_number);
  }

  AdjunctionInstance inst;
  inst.omega = builders[0].graph;
  inst.gamma = builders[1].graph;
  inst.s = builders[2].graph;
  inst.p = builders[3].graph;
  GraphMorphism* targets[4] = {&inst.h, &inst.w, &inst.lambda, &inst.sigma};
  for (int i = 0; i < 4; ++i) {
    const PartialMap& pm = maps[i];
    if (!pm.mentioned && i < 2) {
      *targets[i] = by_labels(builders[kMaps[i].domain].graph, inst.omega, kMaps[i].name);
      continue;
    }
    for (int x : pm.vertex_map) {
      if (x < 0) fail(ErrorKind::malformed_input, std::string("map ") + kMaps[i].name + " leaves a vertex unmapped");
    }
    for (int x : pm.edge_map) {
      if (x < 0) fail(ErrorKind::malformed_input, std::string("map ") + kMaps[i].name + " leaves an edge unmapped");
    }
    targets[i]->vertex_map = pm.vertex_map;
    targets[i]->edge_map = pm.edge_map;
  }
  validate(inst);
  return inst;
}

std::string to_text(const AdjunctionInstance& inst) {
  std::ostringstream out;
  const LabeledGraph* graphs[4] = {&inst.omega, &inst.gamma, &inst.s, &inst.p};
  for (int i = 0; i < 4; ++i) out << "graph " << kGraphs[i] << '\n' << to_text(*graphs[i]);
  const GraphMorphism* maps[4] = {&inst.h, &inst.w, &inst.lambda, &inst.sigma};
  for (int i = 0; i < 4; ++i) {
    for (std::size_t v = 0; v < maps[i]->vertex_map.size(); ++v) {
      out << "map " << kMaps[i].name << " v" << v << " -> v" << maps[i]->vertex_map[v] << '\n';
    }
    for (std::size_t e = 0; e < maps[i]->edge_map.size(); ++e) {
      out << "map " << kMaps[i].name << " e" << e << " -> e" << maps[i]->edge_map[e] << '\n';
    }
  }
  return out.str();
}

}  // namespace pirank
