#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pirank/words.hpp"

namespace pirank {

// Directed edge. `label` is a generator index (>= 1) when the graph is read
// as a graph over the rose, and 0 when the edge carries no label.
struct Edge {
  int from = 0;
  int to = 0;
  int label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite directed graph with dense vertex and edge ids. A graph whose edges
// are all labelled is the same thing as a graph with a morphism to a rose.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int vertices) : vertices_(vertices) {}

  int add_vertex() { return vertices_++; }
  int add_edge(int from, int to, int label = 0);

  int num_vertices() const noexcept { return vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<int> base() const noexcept { return base_; }
  void set_base(std::optional<int> v) { base_ = v; }

  // Loops count twice.
  int valence(int v) const;
  std::vector<int> valences() const;
  bool is_labeled() const noexcept;
  // No two edges with one label share an initial vertex, or a terminal one.
  bool is_immersed() const;
  int max_label() const noexcept;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int vertices_ = 0;
  std::vector<Edge> edges_;
  std::optional<int> base_;
};

// Cell maps; f o iota == iota o f and f o tau == tau o f.
struct GraphMorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;

  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

bool is_morphism(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& f);
// A morphism that is also label preserving on labelled edges.
bool is_label_preserving(const LabeledGraph& domain, const LabeledGraph& codomain,
                         const GraphMorphism& f);
// Local injectivity at every vertex.
bool is_immersion(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& f);
GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);
GraphMorphism identity_morphism(const LabeledGraph& g);

// Rose with one vertex and edge i-1 labelled i.
LabeledGraph rose(int rank);
// The morphism to rose(rank) determined by the labels.
GraphMorphism morphism_to_rose(const LabeledGraph& g);

// Cycle spelling w from vertex 0: edge i joins vertices i and i+1 (mod |w|),
// pointing forward when w[i] is a generator and backward when it is an inverse.
LabeledGraph word_to_cycle(const Word& w, const Alphabet& alphabet);

struct Folding {
  LabeledGraph folded;
  GraphMorphism quotient;
};
// Stallings folding of the label map.
Folding fold(const LabeledGraph& g);
// Folding of the map to an arbitrary target given by edge images.
Folding fold_over(const LabeledGraph& g, std::span<const int> edge_image);

struct FiberProduct {
  LabeledGraph graph;
  GraphMorphism to_first;
  GraphMorphism to_second;
};
FiberProduct fiber_product(const LabeledGraph& first, const GraphMorphism& h,
                           const LabeledGraph& second, const GraphMorphism& w,
                           const LabeledGraph& target);
// Fiber product of two labelled graphs over the rose.
FiberProduct fiber_product(const LabeledGraph& first, const LabeledGraph& second);

struct Subgraph {
  LabeledGraph graph;
  std::vector<int> vertex_origin;  // new vertex -> old vertex
  std::vector<int> edge_origin;
};
// Repeatedly deletes valence-1 vertices other than the basepoint. Isolated
// vertices stay.
Subgraph core(const LabeledGraph& g);
Subgraph connected_component(const LabeledGraph& g, int vertex);

struct BettiEuler {
  int components = 0;
  int b1 = 0;
  int chi = 0;

  friend bool operator==(const BettiEuler&, const BettiEuler&) = default;
};
BettiEuler betti_euler(const LabeledGraph& g);
BettiEuler betti_euler(int vertices, std::span<const std::pair<int, int>> edges);

// Spanning-tree basis of pi_1 of a based graph (component of the base).
struct Basis {
  std::vector<int> generator_of_edge;  // -1 for tree edges and unreachable edges
  std::vector<int> generator_edges;    // generator i is read on this edge
  std::vector<Word> generator_words;   // image of generator i in F (labelled graphs)
  int rank() const noexcept { return static_cast<int>(generator_edges.size()); }
};
Basis spanning_tree_basis(const LabeledGraph& g);

enum class LiftStatus { closed, open, none };

struct Lift {
  LiftStatus status = LiftStatus::none;
  Word in_basis;      // valid when closed
  int end_vertex = -1;
  std::vector<int> edges;  // edges traversed, valid unless status is none
};
// Lifts a loop read from the basepoint through a labelled immersed graph.
Lift express_in_basis(const LabeledGraph& g, const Basis& basis, const Word& loop);
Lift express_in_basis(const LabeledGraph& g, const Word& loop);
// Edge ids of the path reading `letters` from `start`, or nullopt.
std::optional<std::vector<int>> read_path(const LabeledGraph& g, int start,
                                          std::span<const Letter> letters);

// BFS renumbering from the base with (label, direction)-sorted edge order.
// Requires a based, labelled, immersed graph; only the base component counts.
std::string canonical_form(const LabeledGraph& g);
// Minimum of canonical_form over all basepoints.
std::string unbased_canonical_form(const LabeledGraph& g);

// True iff there is a based label-preserving morphism from -> to (both based immersions).
bool factors_through(const LabeledGraph& from, const LabeledGraph& to);
std::optional<GraphMorphism> based_morphism(const LabeledGraph& from, const LabeledGraph& to);

// Text format: `v <id>`, `e <id> <from> <to> <label>`, `base <id>`, `#` comments.
// Labels are letters a..z, `_` when absent.
std::string to_text(const LabeledGraph& g);
LabeledGraph parse_graph(std::string_view text);
// Parses a single graph line into g; returns false if the line is not a graph line.
// Used by the block-structured instance and complex formats.
struct GraphTextBuilder {
  LabeledGraph graph;
  std::vector<long long> vertex_ids;
  std::vector<long long> edge_ids;

  bool consume(std::string_view line, int line_number);
  int vertex(long long id, int line_number) const;
  int edge(long long id, int line_number) const;
};

}  // namespace pirank
