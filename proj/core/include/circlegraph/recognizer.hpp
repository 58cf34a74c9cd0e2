// Circle-graph recognition: vertices of a connected graph arrive one at a
// time (each with its neighbourhood among the earlier vertices, as produced
// by an LBFS), and the recognizer maintains the split decomposition tree of
// the inserted prefix together with one chord diagram per prime label. A
// vertex is rejected exactly when no chord diagram realizes the grown graph;
// on full acceptance a diagram of the whole graph can be extracted and
// independently re-checked against the input.
#pragma once

#include <span>
#include <vector>

#include "circlegraph/chord_word.hpp"
#include "circlegraph/csc.hpp"
#include "circlegraph/graph.hpp"
#include "circlegraph/split_tree.hpp"

namespace cg {

// Incremental state for one connected graph. The tree exists from the third
// vertex on; marker ids double as chord ids in `store`, so prime labels keep
// their diagrams in step with the structural updates.
struct RecognizerState {
  SplitTree tree;
  CscStore store;
  std::vector<Csc> node_diag;                // per prime node: label diagram
  std::vector<ConsecutiveWitness> node_wit;  // factor found by the last test
  std::vector<Vertex> inserted;              // insertion order
  bool bootstrap_edge = false;  // adjacency of the first two vertices
  bool rejected = false;

  bool has_vertex(Vertex v) const;
};

// Adds x with its neighbourhood among the already inserted vertices. Returns
// false when no chord diagram realizes the grown graph; the state then only
// supports reading `inserted`. Throws std::invalid_argument on unknown or
// duplicate neighbours, a reused vertex id, or a vertex that would leave the
// inserted graph disconnected.
bool insert_vertex(RecognizerState& st, Vertex x,
                   std::span<const Vertex> neighbors);

// Chord diagram of the accepted graph: every tree edge is spliced away in a
// scratch copy of the diagram store, leaving one chord per vertex. Endpoint
// indices are renumbered in order of first appearance.
ChordWord extract_diagram(const RecognizerState& st);

// Certificate check in time near-linear in the word and edge count: w must
// be a double-occurrence word over exactly the vertices of g whose chord
// crossings are exactly the edges of g.
bool certify(const Graph& g, const ChordWord& w);

struct RecognizeResult {
  bool is_circle = true;
  // One diagram per connected component (original vertex ids), aligned with
  // component_vertices; their concatenation is a diagram of the whole graph.
  std::vector<ChordWord> diagrams;
  std::vector<std::vector<Vertex>> component_vertices;
  // On rejection: the vertex whose insertion failed, plus the insertion
  // order of its component up to and including it. The prefix without
  // failed_vertex is a circle graph, so this pinpoints the obstruction.
  Vertex failed_vertex = -1;
  std::vector<Vertex> failed_prefix;
};

// Decides whether g is a circle graph by inserting each component's vertices
// in LBFS order. Every accepted component diagram is re-certified against
// the input before being returned.
RecognizeResult recognize(const Graph& g);

}  // namespace cg
