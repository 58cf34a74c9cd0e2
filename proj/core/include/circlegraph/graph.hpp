// Simple undirected graphs over dense integer vertex ids, plus the basic
// utilities (components, induced subgraphs) shared by the whole library.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cg {

using Vertex = int;

// Simple undirected graph. Vertices are 0..vertex_count()-1; adjacency is
// kept sorted so neighbour queries are binary searches and iteration is
// deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_; }

  // Adds an undirected edge. Returns false if it was already present.
  // Throws std::invalid_argument on self-loops or out-of-range ids.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex u) const;
  int degree(Vertex u) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;                 // on 0..|s|-1
  std::vector<Vertex> to_old;  // new id -> old id (sorted ascending)
  std::vector<int> to_new;     // old id -> new id, -1 if not selected
};

// Subgraph induced on `s` (ids must be valid; duplicates rejected).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

}  // namespace cg
