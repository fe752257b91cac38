#include <algorithm>
#include <sstream>

#include "pirank/error.hpp"
#include "pirank/graph.hpp"
#include "pirank/text_util.hpp"

namespace pirank {

namespace {

int parse_label(std::string_view token, int line_number) {
  if (token == "_") return 0;
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') return token[0] - 'a' + 1;
  text::malformed(line_number, "bad edge label '" + std::string(token) + "'");
}

int index_of(const std::vector<long long>& ids, long long id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

}  // namespace

int GraphTextBuilder::vertex(long long id, int line_number) const {
  const int v = index_of(vertex_ids, id);
  if (v < 0) text::malformed(line_number, "unknown vertex " + std::to_string(id));
  return v;
}

int GraphTextBuilder::edge(long long id, int line_number) const {
  const int e = index_of(edge_ids, id);
  if (e < 0) text::malformed(line_number, "unknown edge " + std::to_string(id));
  return e;
}

bool GraphTextBuilder::consume(std::string_view line, int line_number) {
  const auto tokens = text::split(line);
  if (tokens.empty()) return false;
  const std::string_view head = tokens[0];
  if (head == "v") {
    if (tokens.size() != 2) text::malformed(line_number, "expected `v <id>`");
    const long long id = text::integer(tokens[1], line_number);
    if (index_of(vertex_ids, id) >= 0) text::malformed(line_number, "duplicate vertex " + std::to_string(id));
    vertex_ids.push_back(id);
    graph.add_vertex();
    return true;
  }
  if (head == "e") {
    if (tokens.size() != 5) text::malformed(line_number, "expected `e <id> <from> <to> <label>`");
    const long long id = text::integer(tokens[1], line_number);
    if (index_of(edge_ids, id) >= 0) text::malformed(line_number, "duplicate edge " + std::to_string(id));
    const int from = vertex(text::integer(tokens[2], line_number), line_number);
    const int to = vertex(text::integer(tokens[3], line_number), line_number);
    edge_ids.push_back(id);
    graph.add_edge(from, to, parse_label(tokens[4], line_number));
    return true;
  }
  if (head == "base") {
    if (tokens.size() != 2) text::malformed(line_number, "expected `base <id>`");
    graph.set_base(vertex(text::integer(tokens[1], line_number), line_number));
    return true;
  }
  return false;
}

std::string to_text(const LabeledGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.num_vertices(); ++v) out << "v " << v << '\n';
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    out << "e " << e << ' ' << edge.from << ' ' << edge.to << ' ';
    if (edge.label == 0) {
      out << '_';
    } else {
      out << letter_name(edge.label);
    }
    out << '\n';
  }
  if (g.base()) out << "base " << *g.base() << '\n';
  return out.str();
}

LabeledGraph parse_graph(std::string_view input) {
  GraphTextBuilder builder;
  text::for_each_line(input, [&](std::string_view line, int line_number) {
    if (!builder.consume(line, line_number)) {
      text::malformed(line_number, "unrecognised line '" + std::string(line) + "'");
    }
  });
  return builder.graph;
}

}  // namespace pirank
