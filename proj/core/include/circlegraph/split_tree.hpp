// Graph-labelled split decomposition tree maintained incrementally.
//
// Internal nodes carry a label graph over "markers"; every marker is one
// extremity of a tree edge, the other extremity being a marker of another
// node or a leaf (an original graph vertex). Leaf y is adjacent to leaf x in
// the represented graph exactly when an alternating tree-edge/label-edge path
// connects them. Degenerate labels (cliques and stars) are implicit; prime
// labels keep explicit adjacency lists.
//
// The tree is rooted at the most recently inserted leaf. Inserting the next
// vertex marks the subtree spanned by its earlier neighbours, classifies the
// marking into one of seven update shapes, and rewrites the tree accordingly;
// chord-diagram bookkeeping is delegated to caller-provided hooks so this
// module stays independent of the diagram store.
#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circlegraph/graph.hpp"

namespace cg {

using MarkerId = int;

enum class NodeKind : unsigned char { Clique, Star, Prime };

enum class MarkState : unsigned char { Empty, Perfect, Mixed };

struct Marking;

struct Classification {
  int case_id = 0;  // 1..7
  // Cases 1-4: the witness node (for the probed variant of case 2, the star
  // beyond the boundary edge). Case 5: edge_marker names either extremity.
  // Case 6: edge_marker is the extremity whose far subtree holds no marked
  // leaf. Case 7: one marker per fully-mixed tree edge.
  int node = -1;
  MarkerId edge_marker = -1;
  // Case 6 only: the empty extremity is the leaf opposite edge_marker (a
  // pendant insertion), so the new star's centre pairs with that leaf.
  bool centre_far = false;
  std::vector<MarkerId> tm_edges;
};

// Diagram maintenance callbacks. `prepare` calls answer whether the node's
// marked chords can be made consecutive with the mixed ones outermost
// (returning false rejects the inserted vertex); `join` merges the prepared
// diagrams across a tree edge; `insert_crossing` threads the new chord
// through the prepared factor.
struct DiagramHooks {
  std::function<bool(int node, std::span<const MarkerId> mp,
                     std::span<const MarkerId> mixed)>
      prime_prepare;
  std::function<bool(int node, NodeKind kind, MarkerId centre,
                     std::span<const MarkerId> chords,
                     std::span<const MarkerId> mp,
                     std::span<const MarkerId> mixed)>
      degenerate_prepare;
  std::function<void(int kept, int absorbed, MarkerId q_kept,
                     MarkerId q_absorbed)>
      join;
  std::function<void(int node, MarkerId new_chord)> insert_crossing;
};

class SplitTree {
 public:
  // Seeds the tree with one degenerate node over three leaves;
  // centre_of_star < 0 builds a clique (triangle), otherwise a star centred
  // at the marker attached to that vertex.
  void init_three(Vertex a, Vertex b, Vertex c, Vertex centre_of_star);

  bool empty() const { return nodes_.empty(); }
  int node_count_alive() const;
  bool has_leaf(Vertex v) const;
  int root_leaf() const { return root_leaf_; }

  // --- structure accessors -------------------------------------------------
  NodeKind kind(int node) const;
  MarkerId centre(int node) const;
  const std::vector<MarkerId>& markers(int node) const;
  int marker_node(MarkerId q) const;
  bool marker_alive(MarkerId q) const;
  // Opposite extremity of q's tree edge: (leaf, -1) or (-1, marker).
  Vertex opposite_leaf(MarkerId q) const;
  MarkerId opposite_marker(MarkerId q) const;
  MarkerId leaf_marker(Vertex v) const;  // marker whose opposite is leaf v
  MarkerId up_marker(int node) const;
  std::vector<int> alive_nodes() const;
  // Label adjacency of q inside its node (materialized for degenerate kinds).
  std::vector<MarkerId> label_neighbors(MarkerId q) const;
  bool label_adjacent(MarkerId a, MarkerId b) const;

  // --- split tree primitives ----------------------------------------------
  // Merges the two nodes joined by the tree edge at `q` (both extremities
  // die); returns the surviving node, which keeps the label union plus all
  // cross pairs N(q) x N(opposite). The node on the root side survives.
  int node_join(MarkerId q);
  // Moves `part` (at least 2 markers, leaving at least 2 behind) into a fresh
  // node of the same kind linked back by a fresh marker pair; returns the
  // fresh marker left in `node`.
  MarkerId node_split(int node, std::span<const MarkerId> part);

  std::vector<Vertex> accessible_leaves(MarkerId q) const;
  Graph accessibility_graph(int vertex_count) const;

  // --- incremental insertion ------------------------------------------------
  Marking mark(std::span<const Vertex> s_leaves);
  std::optional<Classification> classify(const Marking& mk) const;
  // Splits marked-node bulk off every degenerate fully-mixed node wherever a
  // legal split (two or more markers on each side) exists, leaving each such
  // node with at most four markers; a same-side group of two or more survives
  // only when the rest of the node is a single marker.
  void clean(Marking& mk, const Classification& cls);
  // Joins the fully-mixed subtree into one node (hooks->join per edge);
  // returns the surviving node.
  int contract_fully_mixed(Marking& mk, const Classification& cls,
                           const DiagramHooks& hooks);
  // Applies the classified update inserting leaf x. Returns false when a
  // diagram hook reports the factor test failed (vertex not insertable); the
  // tree may be left partially rewritten in that case.
  bool insert_vertex_structure(Vertex x, Marking& mk, Classification cls,
                               const DiagramHooks& hooks);

  // Re-roots the tree at an existing leaf (done after every insertion so
  // markings climb toward the latest vertex).
  void re_root(Vertex leaf);

  // Structural invariants: tree-ness, marker pairing, label shapes, reduced
  // form, and (when g is given) accessibility == g. Labels of at most
  // `primality_limit` markers are also checked for genuine primality /
  // degeneracy. Returns human-readable issues; empty means valid.
  std::vector<std::string> validate(const Graph* g, int primality_limit = 15) const;

  void dump(std::ostream& os) const;

  // Marking accessors used by the recognizer's hooks and by tests.
  struct NodeMarking {
    int node = -1;
    std::vector<MarkerId> perfect, empty, mixed;  // stamped, up marker excluded
    std::vector<std::pair<int, MarkerId>> touched_children;  // (child, marker here)
    int bulk = 0;               // unstamped markers; all lie over unmarked subtrees
    bool climbed = false;       // upward path already registered
    bool has_up = false;        // false only before the up state is known
    MarkState up_state = MarkState::Empty;
    bool up_is_root_leaf = false;
  };

 private:
  struct MarkerRec {
    int node = -1;
    MarkerId opp_marker = -1;
    Vertex opp_leaf = -1;
    bool alive = false;
    std::vector<MarkerId> nbrs;  // explicit label adjacency (prime nodes)
  };
  struct NodeRec {
    NodeKind kind = NodeKind::Clique;
    MarkerId centre = -1;
    MarkerId up = -1;
    bool alive = false;
    std::vector<MarkerId> markers;
  };

  MarkerId new_marker(int node);
  int new_node(NodeKind kind);
  void attach_leaf(MarkerId q, Vertex v);
  void attach_markers(MarkerId a, MarkerId b);
  void compact_markers(int node);
  NodeKind detect_kind(int node, MarkerId* centre_out) const;
  // Fresh ternary node subdividing q's tree edge; returns {node, marker
  // paired with q, marker paired with q's old opposite}.
  std::array<int, 3> subdivide_edge(MarkerId q);
  // Leaves reached by alternating tree-edge / label-edge walks.  When
  // cross_seed is set the walk starts by crossing q's own tree edge;
  // otherwise it starts from q's label neighbours inside its node.
  std::vector<Vertex> leaves_reachable(MarkerId q, bool cross_seed) const;
  MarkState lookback_state(const Marking& mk, int node, MarkerId excluded) const;
  MarkState state_of(const Marking& mk, int node, MarkerId q) const;
  std::vector<MarkerId> probe_candidates(const Marking& mk, int node) const;
  void add_label_edge(MarkerId a, MarkerId b);
  std::vector<MarkerId> mp_of(const Marking& mk, int node) const;
  std::vector<MarkerId> mixed_of(const Marking& mk, int node) const;

  std::vector<MarkerRec> markers_;
  std::vector<NodeRec> nodes_;
  std::vector<MarkerId> leaf_marker_;  // per vertex, -1 until inserted
  int root_leaf_ = -1;

  // Epoch-stamped scratch for markings.
  mutable std::vector<int> marker_stamp_;
  mutable std::vector<MarkState> marker_state_;
  mutable std::vector<int> node_stamp_, node_slot_;
  int epoch_ = 0;

  friend struct Marking;
};

struct Marking {
  int epoch = -1;
  std::vector<Vertex> s_leaves;
  std::vector<int> touched;  // bottom-up (children before parents)
  std::vector<SplitTree::NodeMarking> data;  // parallel to touched
  int top_node = -1;

  const SplitTree::NodeMarking* find(int node) const {
    for (std::size_t i = 0; i < touched.size(); ++i)
      if (touched[i] == node) return &data[i];
    return nullptr;
  }
};

std::vector<std::string> validate_split_tree(const SplitTree& t, const Graph& g);

}  // namespace cg
