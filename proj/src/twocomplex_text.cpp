#include <sstream>

#include "pirank/error.hpp"
#include "pirank/text_util.hpp"
#include "pirank/twocomplex.hpp"

namespace pirank {

namespace {

struct ComplexBuilder {
  GraphTextBuilder graph;
  std::vector<long long> face_ids;
  std::vector<std::vector<Step>> faces;

  bool consume(std::string_view line, int line_number) {
    const auto tokens = text::split(line);
    if (tokens[0] != "face") return graph.consume(line, line_number);
    if (tokens.size() < 3) text::malformed(line_number, "expected `face <id> <step> ...`");
    const long long id = text::integer(tokens[1], line_number);
    for (long long other : face_ids) {
      if (other == id) text::malformed(line_number, "duplicate face " + std::to_string(id));
    }
    std::vector<Step> path;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const std::string_view t = tokens[i];
      if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) text::malformed(line_number, "steps look like +3 or -3");
      const int e = graph.edge(text::integer(t.substr(1), line_number), line_number);
      path.push_back(t[0] == '+' ? e : reverse_step(e));
    }
    face_ids.push_back(id);
    faces.push_back(std::move(path));
    return true;
  }

  int face(long long id, int line_number) const {
    for (std::size_t i = 0; i < face_ids.size(); ++i) {
      if (face_ids[i] == id) return static_cast<int>(i);
    }
    text::malformed(line_number, "unknown face " + std::to_string(id));
  }

  TwoComplex complex() const {
    TwoComplex y{graph.graph, faces};
    validate(y);
    return y;
  }
};

void write_faces(std::ostringstream& out, const TwoComplex& y) {
  for (int g = 0; g < y.num_faces(); ++g) {
    out << "face " << g;
    for (Step s : y.faces[g]) out << ' ' << (step_forward(s) ? '+' : '-') << step_edge(s);
    out << '\n';
  }
}

}  // namespace

std::string to_text(const TwoComplex& y) {
  std::ostringstream out;
  out << to_text(y.skeleton);
  write_faces(out, y);
  return out.str();
}

TwoComplex parse_complex(std::string_view input) {
  ComplexBuilder builder;
  text::for_each_line(input, [&](std::string_view line, int line_number) {
    if (!builder.consume(line, line_number)) text::malformed(line_number, "unrecognised line '" + std::string(line) + "'");
  });
  return builder.complex();
}

BranchedMap parse_branched_map(std::string_view input) {
  ComplexBuilder builders[2];
  bool declared[2] = {};
  int current = -1;
  struct MapLine {
    char kind;
    long long from;
    long long to;
    long long offset;
    long long degree;
    int line_number;
  };
  std::vector<MapLine> map_lines;
  text::for_each_line(input, [&](std::string_view line, int line_number) {
    const auto tokens = text::split(line);
    if (tokens[0] == "complex") {
      if (tokens.size() != 2 || (tokens[1] != "y" && tokens[1] != "x")) text::malformed(line_number, "expected `complex <y|x>`");
      current = tokens[1] == "y" ? 0 : 1;
      if (declared[current]) text::malformed(line_number, "complex declared twice");
      declared[current] = true;
      return;
    }
    if (tokens[0] == "map") {
      if (tokens.size() < 4 || tokens[2] != "->") text::malformed(line_number, "expected `map <cell> -> <cell>`");
      const std::string_view a = tokens[1];
      const std::string_view b = tokens[3];
      if (a.size() < 2 || b.size() < 2 || a[0] != b[0] || (a[0] != 'v' && a[0] != 'e' && a[0] != 'f')) {
        text::malformed(line_number, "cells look like v1, e2 or f0, of one kind on both sides");
      }
      MapLine m{a[0], text::integer(a.substr(1), line_number), text::integer(b.substr(1), line_number), 0, 1, line_number};
      if (a[0] == 'f') {
        if (tokens.size() != 6) text::malformed(line_number, "expected `map f<i> -> f<j> <offset> <degree>`");
        m.offset = text::integer(tokens[4], line_number);
        m.degree = text::integer(tokens[5], line_number);
      } else if (tokens.size() != 4) {
        text::malformed(line_number, "trailing tokens after a cell map");
      }
      map_lines.push_back(m);
      return;
    }
    if (current < 0) text::malformed(line_number, "line outside a `complex` block");
    if (!builders[current].consume(line, line_number)) text::malformed(line_number, "unrecognised line '" + std::string(line) + "'");
  });
  if (!declared[0] || !declared[1]) fail(ErrorKind::malformed_input, "expected `complex y` and `complex x` blocks");
  TwoComplex y = builders[0].complex();
  TwoComplex x = builders[1].complex();
  if (map_lines.empty()) return branched_map_by_labels(std::move(y), x);

  ComplexMap m;
  m.skeleton.vertex_map.assign(y.skeleton.num_vertices(), -1);
  m.skeleton.edge_map.assign(y.skeleton.num_edges(), -1);
  m.face_target.assign(y.num_faces(), -1);
  m.face_offset.assign(y.num_faces(), 0);
  m.degree.assign(y.num_faces(), 1);
  for (const MapLine& l : map_lines) {
    int* slot = nullptr;
    int value = 0;
    if (l.kind == 'v') {
      slot = &m.skeleton.vertex_map[builders[0].graph.vertex(l.from, l.line_number)];
      value = builders[1].graph.vertex(l.to, l.line_number);
    } else if (l.kind == 'e') {
      slot = &m.skeleton.edge_map[builders[0].graph.edge(l.from, l.line_number)];
      value = builders[1].graph.edge(l.to, l.line_number);
    } else {
      const int g = builders[0].face(l.from, l.line_number);
      slot = &m.face_target[g];
      value = builders[1].face(l.to, l.line_number);
      m.face_offset[g] = static_cast<int>(l.offset);
      m.degree[g] = static_cast<int>(l.degree);
    }
    if (*slot >= 0) text::malformed(l.line_number, "cell mapped twice");
    *slot = value;
  }
  for (int v : m.skeleton.vertex_map) {
    if (v < 0) fail(ErrorKind::malformed_input, "the map leaves a vertex unmapped");
  }
  for (int e : m.skeleton.edge_map) {
    if (e < 0) fail(ErrorKind::malformed_input, "the map leaves an edge unmapped");
  }
  for (int t : m.face_target) {
    if (t < 0) fail(ErrorKind::malformed_input, "the map leaves a face unmapped");
  }
  if (std::string defect = branched_map_defect(y, x, m); !defect.empty()) {
    fail(ErrorKind::malformed_input, "not a branched map: " + defect);
  }
  return {std::move(y), std::move(x), std::move(m)};
}

std::string to_text(const BranchedMap& f) {
  std::ostringstream out;
  out << "complex y\n" << to_text(f.domain) << "complex x\n" << to_text(f.codomain);
  for (std::size_t v = 0; v < f.map.skeleton.vertex_map.size(); ++v) {
    out << "map v" << v << " -> v" << f.map.skeleton.vertex_map[v] << '\n';
  }
  for (std::size_t e = 0; e < f.map.skeleton.edge_map.size(); ++e) {
    out << "map e" << e << " -> e" << f.map.skeleton.edge_map[e] << '\n';
  }
  for (std::size_t g = 0; g < f.map.face_target.size(); ++g) {
    out << "map f" << g << " -> f" << f.map.face_target[g] << ' ' << f.map.face_offset[g] << ' ' << f.map.degree[g] << '\n';
  }
  return out.str();
}

}  // namespace pirank
