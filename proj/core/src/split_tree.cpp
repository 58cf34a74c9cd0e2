#include "circlegraph/split_tree.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "circlegraph/oracle.hpp"

namespace cg {

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Clique: return "clique";
    case NodeKind::Star: return "star";
    case NodeKind::Prime: return "prime";
  }
  return "?";
}

}  // namespace

// --- low-level arena -------------------------------------------------------

MarkerId SplitTree::new_marker(int node) {
  const MarkerId id = static_cast<MarkerId>(markers_.size());
  markers_.push_back(MarkerRec{node, -1, -1, true, {}});
  nodes_[node].markers.push_back(id);
  return id;
}

int SplitTree::new_node(NodeKind kind) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(NodeRec{kind, -1, -1, true, {}});
  return id;
}

void SplitTree::attach_leaf(MarkerId q, Vertex v) {
  markers_[q].opp_marker = -1;
  markers_[q].opp_leaf = v;
  if (static_cast<int>(leaf_marker_.size()) <= v) leaf_marker_.resize(v + 1, -1);
  leaf_marker_[v] = q;
}

void SplitTree::attach_markers(MarkerId a, MarkerId b) {
  markers_[a].opp_marker = b;
  markers_[a].opp_leaf = -1;
  markers_[b].opp_marker = a;
  markers_[b].opp_leaf = -1;
}

void SplitTree::compact_markers(int node) {
  auto& list = nodes_[node].markers;
  list.erase(std::remove_if(list.begin(), list.end(),
                            [&](MarkerId m) { return !markers_[m].alive; }),
             list.end());
}

void SplitTree::init_three(Vertex a, Vertex b, Vertex c, Vertex centre_of_star) {
  if (!nodes_.empty()) throw std::invalid_argument("init_three: tree not empty");
  const int u = new_node(centre_of_star >= 0 ? NodeKind::Star : NodeKind::Clique);
  const MarkerId ma = new_marker(u);
  const MarkerId mb = new_marker(u);
  const MarkerId mc = new_marker(u);
  attach_leaf(ma, a);
  attach_leaf(mb, b);
  attach_leaf(mc, c);
  if (centre_of_star >= 0) {
    if (centre_of_star == a) nodes_[u].centre = ma;
    else if (centre_of_star == b) nodes_[u].centre = mb;
    else if (centre_of_star == c) nodes_[u].centre = mc;
    else throw std::invalid_argument("init_three: centre is not one of the leaves");
  }
  nodes_[u].up = mc;
  root_leaf_ = c;
}

// --- accessors ---------------------------------------------------------------

int SplitTree::node_count_alive() const {
  int n = 0;
  for (const auto& nd : nodes_) n += nd.alive ? 1 : 0;
  return n;
}

bool SplitTree::has_leaf(Vertex v) const {
  return v >= 0 && v < static_cast<int>(leaf_marker_.size()) && leaf_marker_[v] >= 0;
}

NodeKind SplitTree::kind(int node) const { return nodes_.at(node).kind; }
MarkerId SplitTree::centre(int node) const { return nodes_.at(node).centre; }
const std::vector<MarkerId>& SplitTree::markers(int node) const {
  return nodes_.at(node).markers;
}
int SplitTree::marker_node(MarkerId q) const { return markers_.at(q).node; }
bool SplitTree::marker_alive(MarkerId q) const {
  return q >= 0 && q < static_cast<int>(markers_.size()) && markers_[q].alive;
}
Vertex SplitTree::opposite_leaf(MarkerId q) const { return markers_.at(q).opp_leaf; }
MarkerId SplitTree::opposite_marker(MarkerId q) const { return markers_.at(q).opp_marker; }
MarkerId SplitTree::leaf_marker(Vertex v) const {
  if (!has_leaf(v)) throw std::invalid_argument("leaf_marker: vertex not in tree");
  return leaf_marker_[v];
}
MarkerId SplitTree::up_marker(int node) const { return nodes_.at(node).up; }

std::vector<int> SplitTree::alive_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (nodes_[i].alive) out.push_back(i);
  return out;
}

std::vector<MarkerId> SplitTree::label_neighbors(MarkerId q) const {
  const MarkerRec& rec = markers_.at(q);
  const NodeRec& nd = nodes_[rec.node];
  std::vector<MarkerId> out;
  switch (nd.kind) {
    case NodeKind::Clique:
      for (MarkerId m : nd.markers)
        if (m != q && markers_[m].alive) out.push_back(m);
      break;
    case NodeKind::Star:
      if (q == nd.centre) {
        for (MarkerId m : nd.markers)
          if (m != q && markers_[m].alive) out.push_back(m);
      } else {
        out.push_back(nd.centre);
      }
      break;
    case NodeKind::Prime:
      out = rec.nbrs;
      break;
  }
  return out;
}

bool SplitTree::label_adjacent(MarkerId a, MarkerId b) const {
  if (a == b) return false;
  const NodeRec& nd = nodes_[markers_.at(a).node];
  if (markers_.at(b).node != markers_.at(a).node) return false;
  switch (nd.kind) {
    case NodeKind::Clique: return true;
    case NodeKind::Star: return a == nd.centre || b == nd.centre;
    case NodeKind::Prime: {
      const auto& nb = markers_[a].nbrs;
      return std::find(nb.begin(), nb.end(), b) != nb.end();
    }
  }
  return false;
}

void SplitTree::add_label_edge(MarkerId a, MarkerId b) {
  markers_[a].nbrs.push_back(b);
  markers_[b].nbrs.push_back(a);
}

NodeKind SplitTree::detect_kind(int node, MarkerId* centre_out) const {
  const NodeRec& nd = nodes_[node];
  const int k = static_cast<int>(nd.markers.size());
  long long edges2 = 0;
  MarkerId hub = -1;
  for (MarkerId m : nd.markers) {
    const int d = static_cast<int>(markers_[m].nbrs.size());
    edges2 += d;
    if (d == k - 1) hub = m;
  }
  *centre_out = -1;
  if (edges2 == static_cast<long long>(k) * (k - 1)) return NodeKind::Clique;
  if (edges2 == 2LL * (k - 1) && hub >= 0) {
    *centre_out = hub;
    return NodeKind::Star;
  }
  return NodeKind::Prime;
}

// --- primitives --------------------------------------------------------------

namespace {
void erase_value(std::vector<MarkerId>& v, MarkerId x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
}
}  // namespace

int SplitTree::node_join(MarkerId q) {
  if (!marker_alive(q)) throw std::invalid_argument("node_join: dead marker");
  const MarkerId r = markers_[q].opp_marker;
  if (r < 0) throw std::invalid_argument("node_join: edge leads to a leaf");
  const int a = markers_[q].node, b = markers_[r].node;
  int kept, absorbed;
  MarkerId qk, qa;
  if (nodes_[b].up == r) {
    kept = a; absorbed = b; qk = q; qa = r;
  } else if (nodes_[a].up == q) {
    kept = b; absorbed = a; qk = r; qa = q;
  } else {
    throw std::logic_error("node_join: edge not oriented");
  }

  const std::vector<MarkerId> nk = label_neighbors(qk);
  const std::vector<MarkerId> na = label_neighbors(qa);

  // Materialize explicit adjacency in both nodes before merging.
  for (int nodeid : {kept, absorbed}) {
    NodeRec& nd = nodes_[nodeid];
    if (nd.kind == NodeKind::Prime) continue;
    for (MarkerId m : nd.markers)
      if (markers_[m].alive) markers_[m].nbrs = label_neighbors(m);
    nd.kind = NodeKind::Prime;
    nd.centre = -1;
  }

  for (MarkerId nb : nk) erase_value(markers_[nb].nbrs, qk);
  for (MarkerId nb : na) erase_value(markers_[nb].nbrs, qa);
  markers_[qk].nbrs.clear();
  markers_[qa].nbrs.clear();
  markers_[qk].alive = false;
  markers_[qa].alive = false;

  for (MarkerId m : nodes_[absorbed].markers) {
    if (!markers_[m].alive) continue;
    markers_[m].node = kept;
    nodes_[kept].markers.push_back(m);
  }
  nodes_[absorbed].alive = false;
  nodes_[absorbed].markers.clear();
  compact_markers(kept);

  for (MarkerId x : nk)
    for (MarkerId y : na) add_label_edge(x, y);

  MarkerId centre = -1;
  const NodeKind nkind = detect_kind(kept, &centre);
  nodes_[kept].kind = nkind;
  nodes_[kept].centre = centre;
  if (nkind != NodeKind::Prime)
    for (MarkerId m : nodes_[kept].markers) markers_[m].nbrs.clear();
  return kept;
}

MarkerId SplitTree::node_split(int node, std::span<const MarkerId> part) {
  NodeRec& nd = nodes_.at(node);
  if (!nd.alive) throw std::invalid_argument("node_split: dead node");
  if (nd.kind == NodeKind::Prime)
    throw std::invalid_argument("node_split: prime labels cannot be split");
  const int k = static_cast<int>(nd.markers.size());
  const int p = static_cast<int>(part.size());
  if (p < 2 || k - p < 2)
    throw std::invalid_argument("node_split: both sides need at least 2 markers");
  std::vector<char> in_part(markers_.size(), 0);
  for (MarkerId m : part) {
    if (!markers_.at(m).alive || markers_[m].node != node)
      throw std::invalid_argument("node_split: marker not in node");
    if (in_part[m]) throw std::invalid_argument("node_split: duplicate marker");
    in_part[m] = 1;
  }

  const int w = new_node(nd.kind);
  for (MarkerId m : part) {
    markers_[m].node = w;
    nodes_[w].markers.push_back(m);
  }
  auto& klist = nodes_[node].markers;
  klist.erase(std::remove_if(klist.begin(), klist.end(),
                             [&](MarkerId m) { return in_part[m]; }),
              klist.end());

  const MarkerId fk = new_marker(node);
  const MarkerId fw = new_marker(w);
  attach_markers(fk, fw);

  NodeRec& keptnd = nodes_[node];
  NodeRec& wnd = nodes_[w];
  if (keptnd.kind == NodeKind::Star) {
    if (in_part[keptnd.centre]) {
      wnd.centre = keptnd.centre;
      keptnd.centre = fk;
    } else {
      wnd.centre = fw;
    }
  }
  if (keptnd.up >= 0 && in_part[keptnd.up]) {
    wnd.up = keptnd.up;
    keptnd.up = fk;
  } else {
    wnd.up = fw;
  }
  return fk;
}

std::array<int, 3> SplitTree::subdivide_edge(MarkerId q) {
  if (!marker_alive(q)) throw std::invalid_argument("subdivide_edge: dead marker");
  const int u = markers_[q].node;
  const int v = new_node(NodeKind::Star);
  const MarkerId vq = new_marker(v);
  const MarkerId vo = new_marker(v);
  const MarkerId r = markers_[q].opp_marker;
  const Vertex leaf = markers_[q].opp_leaf;
  if (r >= 0) {
    attach_markers(vo, r);
  } else {
    attach_leaf(vo, leaf);
  }
  attach_markers(q, vq);
  nodes_[v].up = (nodes_[u].up == q) ? vo : vq;
  return {v, vq, vo};
}

// --- accessibility -------------------------------------------------------------

std::vector<Vertex> SplitTree::leaves_reachable(MarkerId q, bool cross_seed) const {
  std::vector<Vertex> out;
  std::vector<char> seen(markers_.size(), 0);
  std::vector<MarkerId> stack;
  auto cross = [&](MarkerId m) {
    const MarkerRec& rec = markers_[m];
    if (rec.opp_leaf >= 0) {
      out.push_back(rec.opp_leaf);
    } else if (!seen[rec.opp_marker]) {
      seen[rec.opp_marker] = 1;
      stack.push_back(rec.opp_marker);
    }
  };
  if (cross_seed) {
    cross(q);
  } else {
    seen[q] = 1;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    const MarkerId m = stack.back();
    stack.pop_back();
    for (MarkerId nb : label_neighbors(m)) cross(nb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> SplitTree::accessible_leaves(MarkerId q) const {
  if (!marker_alive(q)) throw std::invalid_argument("accessible_leaves: dead marker");
  return leaves_reachable(q, true);
}

Graph SplitTree::accessibility_graph(int vertex_count) const {
  Graph g(vertex_count);
  for (Vertex v = 0; v < static_cast<int>(leaf_marker_.size()); ++v) {
    if (leaf_marker_[v] < 0) continue;
    // A leaf's neighbourhood is read from inside the node its marker lives
    // in: crossing the marker's own tree edge would only lead back to v.
    for (Vertex w : leaves_reachable(leaf_marker_[v], false))
      if (w > v) g.add_edge(v, w);
  }
  return g;
}

// --- marking -------------------------------------------------------------------

Marking SplitTree::mark(std::span<const Vertex> s_leaves) {
  if (s_leaves.empty()) throw std::invalid_argument("mark: empty neighbour set");
  Marking mk;
  mk.epoch = ++epoch_;
  marker_stamp_.resize(markers_.size(), 0);
  marker_state_.resize(markers_.size(), MarkState::Empty);
  node_stamp_.resize(nodes_.size(), 0);
  node_slot_.resize(nodes_.size(), -1);

  auto touch = [&](int node) -> int {
    if (node_stamp_[node] == epoch_) return node_slot_[node];
    node_stamp_[node] = epoch_;
    const int slot = static_cast<int>(mk.touched.size());
    node_slot_[node] = slot;
    mk.touched.push_back(node);
    mk.data.emplace_back();
    mk.data.back().node = node;
    return slot;
  };
  auto stamp = [&](MarkerId m, MarkState st) {
    marker_stamp_[m] = epoch_;
    marker_state_[m] = st;
  };

  for (Vertex s : s_leaves) {
    if (!has_leaf(s)) throw std::invalid_argument("mark: neighbour not in tree");
    mk.s_leaves.push_back(s);
    const MarkerId m = leaf_marker_[s];
    const int u = markers_[m].node;
    int slot = touch(u);
    if (nodes_[u].up == m) {
      // Only the root leaf sits above its node.
      mk.data[slot].up_state = MarkState::Perfect;
      mk.data[slot].has_up = true;
      mk.data[slot].up_is_root_leaf = true;
    } else {
      stamp(m, MarkState::Perfect);
      mk.data[slot].perfect.push_back(m);
    }
    // Climb toward the root, registering each new edge at its parent.
    int cur = u;
    int curslot = slot;
    while (!mk.data[curslot].climbed) {
      mk.data[curslot].climbed = true;
      const MarkerId up = nodes_[cur].up;
      const MarkerId opp = markers_[up].opp_marker;
      if (opp < 0) {
        mk.top_node = cur;
        if (!mk.data[curslot].has_up) {
          mk.data[curslot].up_state = MarkState::Empty;
          mk.data[curslot].has_up = true;
          mk.data[curslot].up_is_root_leaf = true;
        }
        break;
      }
      const int parent = markers_[opp].node;
      const int pslot = touch(parent);
      mk.data[pslot].touched_children.emplace_back(cur, opp);
      cur = parent;
      curslot = pslot;
    }
  }

  // Bottom-up: compute each touched node's contribution at its parent.
  std::vector<int> indeg(mk.touched.size(), 0);
  for (std::size_t i = 0; i < mk.touched.size(); ++i)
    indeg[i] = static_cast<int>(mk.data[i].touched_children.size());
  std::vector<int> order;
  order.reserve(mk.touched.size());
  for (std::size_t i = 0; i < mk.touched.size(); ++i)
    if (indeg[i] == 0) order.push_back(static_cast<int>(i));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int slot = order[head];
    const int u = mk.touched[slot];
    auto& d = mk.data[slot];
    const NodeRec& nd = nodes_[u];
    const MarkerId up = nd.up;
    // All stamps on this node are in place once its children are done; the
    // unstamped remainder (minus the up marker) lies over unmarked subtrees.
    int stamped = 0;
    for (MarkerId m : nd.markers)
      if (marker_stamp_[m] == epoch_) ++stamped;
    d.bulk = static_cast<int>(nd.markers.size()) - stamped - 1;
    if (u == mk.top_node) continue;
    // State of u's subtree as seen from the parent: perfect when every label
    // neighbour of the entering marker is perfect and everything else empty.
    MarkState st;
    const int p = static_cast<int>(d.perfect.size());
    const int e = static_cast<int>(d.empty.size());
    const int m = static_cast<int>(d.mixed.size());
    if (p == 0 && m == 0) {
      st = MarkState::Empty;
    } else {
      bool perfect = false;
      switch (nd.kind) {
        case NodeKind::Clique:
          perfect = (e == 0 && m == 0 && d.bulk == 0);
          break;
        case NodeKind::Star:
          if (up == nd.centre) {
            perfect = (e == 0 && m == 0 && d.bulk == 0);
          } else {
            perfect = (m == 0 && p == 1 &&
                       marker_stamp_[nd.centre] == epoch_ &&
                       marker_state_[nd.centre] == MarkState::Perfect);
          }
          break;
        case NodeKind::Prime: {
          perfect = (m == 0 && p == static_cast<int>(markers_[up].nbrs.size()));
          if (perfect)
            for (MarkerId nb : markers_[up].nbrs)
              if (marker_stamp_[nb] != epoch_ ||
                  marker_state_[nb] != MarkState::Perfect) {
                perfect = false;
                break;
              }
          break;
        }
      }
      st = perfect ? MarkState::Perfect : MarkState::Mixed;
    }
    const MarkerId opp = markers_[up].opp_marker;
    const int pslot = node_slot_[markers_[opp].node];
    stamp(opp, st);
    auto& pd = mk.data[pslot];
    (st == MarkState::Perfect ? pd.perfect
     : st == MarkState::Empty ? pd.empty
                              : pd.mixed)
        .push_back(opp);
    if (--indeg[pslot] == 0) order.push_back(pslot);
  }
  if (order.size() != mk.touched.size())
    throw std::logic_error("mark: marked nodes do not form a rooted subtree");

  // Top-down: state of the rest of the tree at each touched child.
  for (std::size_t head = order.size(); head-- > 0;) {
    const int slot = order[head];
    if (!mk.data[slot].has_up)
      throw std::logic_error("mark: up state missing");
    for (const auto& [child, m] : mk.data[slot].touched_children) {
      const int cslot = node_slot_[child];
      mk.data[cslot].up_state = lookback_state(mk, mk.touched[slot], m);
      mk.data[cslot].has_up = true;
    }
  }

  // Reorder bottom-up so callers can rely on children-before-parents.
  std::vector<int> touched2(mk.touched.size());
  std::vector<SplitTree::NodeMarking> data2(mk.data.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    touched2[i] = mk.touched[order[i]];
    data2[i] = std::move(mk.data[order[i]]);
    node_slot_[touched2[i]] = static_cast<int>(i);
  }
  mk.touched = std::move(touched2);
  mk.data = std::move(data2);
  return mk;
}

MarkState SplitTree::state_of(const Marking& mk, int node, MarkerId q) const {
  const int slot = node_slot_[node];
  if (q == nodes_[node].up) return mk.data[slot].up_state;
  if (marker_stamp_[q] == mk.epoch) return marker_state_[q];
  return MarkState::Empty;
}

// State of the tree minus the subtree behind `excluded`, seen from that edge.
MarkState SplitTree::lookback_state(const Marking& mk, int node,
                                    MarkerId excluded) const {
  const int slot = node_slot_[node];
  const SplitTree::NodeMarking& d = mk.data[slot];
  const NodeRec& nd = nodes_[node];
  const MarkerId up = nd.up;
  const MarkState exst = state_of(mk, node, excluded);
  const bool ex_up = (excluded == up);

  int p = static_cast<int>(d.perfect.size());
  int e = static_cast<int>(d.empty.size());
  int m = static_cast<int>(d.mixed.size());
  int bulk = d.bulk;
  // Fold the up marker in as an ordinary marker, then remove `excluded`.
  if (!ex_up && !d.up_is_root_leaf) {
    // up edge leads to the touched parent; count its state
    (d.up_state == MarkState::Perfect ? p
     : d.up_state == MarkState::Empty ? e
                                      : m)++;
  } else if (!ex_up && d.up_is_root_leaf) {
    (d.up_state == MarkState::Perfect ? p : e)++;
  }
  if (!ex_up) {
    if (marker_stamp_[excluded] == mk.epoch) {
      (exst == MarkState::Perfect ? p
       : exst == MarkState::Empty ? e
                                  : m)--;
    } else {
      --bulk;
    }
  }

  if (p == 0 && m == 0) return MarkState::Empty;
  bool perfect = false;
  switch (nd.kind) {
    case NodeKind::Clique:
      perfect = (e == 0 && m == 0 && bulk == 0);
      break;
    case NodeKind::Star:
      if (excluded == nd.centre) {
        perfect = (e == 0 && m == 0 && bulk == 0);
      } else {
        perfect = (m == 0 && p == 1 &&
                   state_of(mk, node, nd.centre) == MarkState::Perfect);
      }
      break;
    case NodeKind::Prime: {
      const auto& nbrs = markers_[excluded].nbrs;
      perfect = (m == 0 && p == static_cast<int>(nbrs.size()));
      if (perfect)
        for (MarkerId nb : nbrs)
          if (state_of(mk, node, nb) != MarkState::Perfect) {
            perfect = false;
            break;
          }
      break;
    }
  }
  return perfect ? MarkState::Perfect : MarkState::Mixed;
}

// Markers of `node` whose far subtree is unmarked but whose near side looks
// perfect through them; each is a potential update site beyond the marked
// region (star witness or perfect-empty edge).
std::vector<MarkerId> SplitTree::probe_candidates(const Marking& mk,
                                                  int node) const {
  std::vector<MarkerId> out;
  const int slot = node_slot_[node];
  const SplitTree::NodeMarking& d = mk.data[slot];
  const NodeRec& nd = nodes_[node];
  const bool up_mixed = !d.up_is_root_leaf && d.up_state == MarkState::Mixed;
  if (!d.mixed.empty() || up_mixed) return out;
  const int ptotal = static_cast<int>(d.perfect.size()) +
                     (d.up_state == MarkState::Perfect ? 1 : 0);
  if (ptotal == 0) return out;

  auto consider = [&](MarkerId q) {
    if (lookback_state(mk, node, q) == MarkState::Perfect) out.push_back(q);
  };

  if (nd.kind == NodeKind::Prime) {
    MarkerId p0 = -1;
    if (!d.perfect.empty()) p0 = d.perfect.front();
    else p0 = nd.up;  // up marker is the only perfect one
    for (MarkerId q : markers_[p0].nbrs) {
      if (q == nd.up || marker_stamp_[q] == mk.epoch) continue;
      if (static_cast<int>(markers_[q].nbrs.size()) != ptotal) continue;
      consider(q);
    }
  } else {
    if (d.bulk == 1) {
      for (MarkerId q : nd.markers) {
        if (q == nd.up || marker_stamp_[q] == mk.epoch || !markers_[q].alive)
          continue;
        consider(q);
        break;
      }
    } else if (d.bulk >= 2 && nd.kind == NodeKind::Star) {
      // All unmarked non-centre markers are equivalent; test one.
      for (MarkerId q : nd.markers) {
        if (q == nd.up || q == nd.centre || marker_stamp_[q] == mk.epoch ||
            !markers_[q].alive)
          continue;
        consider(q);
        break;
      }
    }
  }
  if (d.up_is_root_leaf && d.up_state == MarkState::Empty) consider(nd.up);
  return out;
}

// --- classification -----------------------------------------------------------

std::optional<Classification> SplitTree::classify(const Marking& mk) const {
  if (mk.epoch != epoch_) throw std::invalid_argument("classify: stale marking");

  struct Flags {
    int p = 0, e = 0, m = 0;
    bool up_p = false, up_m = false;
  };
  std::vector<Flags> fl(mk.touched.size());
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    const auto& d = mk.data[i];
    fl[i].p = static_cast<int>(d.perfect.size());
    fl[i].e = static_cast<int>(d.empty.size());
    fl[i].m = static_cast<int>(d.mixed.size());
    fl[i].up_p = d.up_state == MarkState::Perfect;
    fl[i].up_m = d.up_state == MarkState::Mixed;
  }

  // Case 1: a clique with every marker perfect.
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    const int u = mk.touched[i];
    if (nodes_[u].kind != NodeKind::Clique) continue;
    if (fl[i].e == 0 && fl[i].m == 0 && mk.data[i].bulk == 0 && fl[i].up_p)
      return Classification{1, u, -1, {}};
  }

  std::vector<std::vector<MarkerId>> probes(mk.touched.size());
  std::vector<char> probed(mk.touched.size(), 0);
  auto probe = [&](std::size_t i) -> const std::vector<MarkerId>& {
    if (!probed[i]) {
      probed[i] = 1;
      probes[i] = probe_candidates(mk, mk.touched[i]);
    }
    return probes[i];
  };

  // Case 2: a star that is empty except for a perfect centre, either among
  // the marked nodes or just beyond a boundary edge that looks perfect.
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    const int u = mk.touched[i];
    if (nodes_[u].kind != NodeKind::Star) continue;
    const int ptotal = fl[i].p + (fl[i].up_p ? 1 : 0);
    if (fl[i].m != 0 || fl[i].up_m || ptotal != 1) continue;
    if (state_of(mk, u, nodes_[u].centre) == MarkState::Perfect)
      return Classification{2, u, -1, {}};
  }
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    for (MarkerId q : probe(i)) {
      const MarkerId opp = markers_[q].opp_marker;
      if (opp < 0) continue;
      const int w = markers_[opp].node;
      if (nodes_[w].kind == NodeKind::Star && nodes_[w].centre == opp)
        return Classification{2, w, -1, {}};
    }
  }

  // Cases 5 and 6 on a leaf edge: a perfect marker opposite a leaf l means
  // l is marked, and the state of the leaf-side extremity is what the rest
  // of the marked set looks like from l.  Perfect there means the new vertex
  // duplicates l (split off a clique); empty means the new vertex hangs off
  // l alone (split off a star centred at l's side).
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    const int u = mk.touched[i];
    const auto& d = mk.data[i];
    auto leaf_case = [&](MarkerId m) -> std::optional<Classification> {
      switch (lookback_state(mk, u, m)) {
        case MarkState::Perfect:
          return Classification{5, -1, m, {}};
        case MarkState::Empty: {
          Classification c{6, -1, m, {}};
          c.centre_far = true;
          return c;
        }
        default:
          return std::nullopt;
      }
    };
    for (MarkerId m : d.perfect)
      if (markers_[m].opp_leaf >= 0)
        if (auto c = leaf_case(m)) return c;
    if (d.has_up && d.up_is_root_leaf && d.up_state == MarkState::Perfect)
      if (auto c = leaf_case(nodes_[u].up)) return c;
  }

  // Cases 3 and 4: every marker perfect or empty, and the far side of every
  // internal perfect/empty marker is mixed.
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    const int u = mk.touched[i];
    const auto& d = mk.data[i];
    const int ptotal = fl[i].p + (fl[i].up_p ? 1 : 0);
    if (fl[i].m != 0 || fl[i].up_m || ptotal == 0) continue;
    bool hybrid = true;
    auto far_mixed = [&](MarkerId q) -> bool {
      const MarkerId opp = markers_[q].opp_marker;
      if (opp < 0) return true;  // leaves are exempt
      const int w = markers_[opp].node;
      if (node_stamp_[w] != epoch_) return true;  // unmarked: cannot be P/E edge
      if (nodes_[w].up == opp) return mk.data[node_slot_[w]].up_state == MarkState::Mixed;
      return marker_stamp_[opp] == mk.epoch &&
             marker_state_[opp] == MarkState::Mixed;
    };
    for (const auto* lst : {&d.perfect, &d.empty}) {
      for (MarkerId q : *lst)
        if (!far_mixed(q)) { hybrid = false; break; }
      if (!hybrid) break;
    }
    if (hybrid && !d.up_is_root_leaf && !far_mixed(nodes_[u].up)) hybrid = false;
    if (hybrid && !probe(i).empty()) hybrid = false;  // a far side looks perfect
    if (!hybrid) continue;
    return Classification{nodes_[u].kind == NodeKind::Prime ? 3 : 4, u, -1, {}};
  }

  // Case 5: an internal edge perfect on both sides.
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    for (const auto& [child, m] : mk.data[i].touched_children) {
      const int cslot = node_slot_[child];
      if (marker_state_[m] == MarkState::Perfect &&
          mk.data[cslot].up_state == MarkState::Perfect)
        return Classification{5, -1, m, {}};
    }
  }

  // Case 6: an edge perfect on one side and empty on the other; the stored
  // marker is the extremity whose far subtree is the empty side.
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    for (const auto& [child, m] : mk.data[i].touched_children) {
      const int cslot = node_slot_[child];
      const MarkState a = marker_state_[m];
      const MarkState b = mk.data[cslot].up_state;
      if (a == MarkState::Perfect && b == MarkState::Empty)
        return Classification{6, -1, nodes_[child].up, {}};
      if (a == MarkState::Empty && b == MarkState::Perfect)
        return Classification{6, -1, m, {}};
    }
  }
  for (std::size_t i = 0; i < mk.touched.size(); ++i)
    if (!probe(i).empty())
      return Classification{6, -1, probe(i).front(), {}};

  // Case 7: the fully mixed subtree.
  Classification c7{7, -1, -1, {}};
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    for (const auto& [child, m] : mk.data[i].touched_children) {
      const int cslot = node_slot_[child];
      if (marker_state_[m] == MarkState::Mixed &&
          mk.data[cslot].up_state == MarkState::Mixed)
        c7.tm_edges.push_back(m);
    }
  }
  if (!c7.tm_edges.empty()) return c7;
  return std::nullopt;
}

// --- helpers for updates --------------------------------------------------------

std::vector<MarkerId> SplitTree::mp_of(const Marking& mk, int node) const {
  const auto& d = mk.data[node_slot_[node]];
  std::vector<MarkerId> mp = d.perfect;
  mp.insert(mp.end(), d.mixed.begin(), d.mixed.end());
  if (!d.up_is_root_leaf || d.up_state == MarkState::Perfect) {
    if (d.up_state != MarkState::Empty) mp.push_back(nodes_[node].up);
  }
  return mp;
}

std::vector<MarkerId> SplitTree::mixed_of(const Marking& mk, int node) const {
  const auto& d = mk.data[node_slot_[node]];
  std::vector<MarkerId> mx = d.mixed;
  if (!d.up_is_root_leaf && d.up_state == MarkState::Mixed)
    mx.push_back(nodes_[node].up);
  return mx;
}

namespace {
struct PeSets {
  std::vector<MarkerId> pstar, estar;
};
}  // namespace

// Perfect non-centre markers and the empty-or-perfect-centre rest.
static PeSets split_pe_sets(const SplitTree& t, int node,
                            const SplitTree::NodeMarking& d, int epoch,
                            const std::vector<int>& marker_stamp) {
  PeSets out;
  const MarkerId up = t.up_marker(node);
  const MarkerId centre = t.centre(node);
  for (MarkerId m : d.perfect)
    (m == centre ? out.estar : out.pstar).push_back(m);
  for (MarkerId m : d.empty) out.estar.push_back(m);
  if (d.up_state == MarkState::Perfect)
    (up == centre ? out.estar : out.pstar).push_back(up);
  else if (d.up_state == MarkState::Empty && !d.up_is_root_leaf)
    out.estar.push_back(up);
  else if (d.up_state == MarkState::Empty && d.up_is_root_leaf)
    out.estar.push_back(up);
  for (MarkerId m : t.markers(node)) {
    if (!t.marker_alive(m) || m == up) continue;
    if (marker_stamp[m] != epoch) out.estar.push_back(m);
  }
  return out;
}

void SplitTree::clean(Marking& mk, const Classification& cls) {
  if (cls.case_id != 7) return;
  std::vector<int> tm_nodes;
  for (MarkerId m : cls.tm_edges) {
    for (int u : {markers_[m].node, markers_[markers_[m].opp_marker].node}) {
      if (std::find(tm_nodes.begin(), tm_nodes.end(), u) == tm_nodes.end())
        tm_nodes.push_back(u);
    }
  }
  for (int u : tm_nodes) {
    if (nodes_[u].kind == NodeKind::Prime) continue;
    const int slot = node_slot_[u];
    PeSets pe = split_pe_sets(*this, u, mk.data[slot], epoch_, marker_stamp_);
    auto do_split = [&](std::vector<MarkerId>& part, MarkState fresh_state) {
      const int size = static_cast<int>(nodes_[u].markers.size());
      if (static_cast<int>(part.size()) < 2 ||
          size - static_cast<int>(part.size()) < 2)
        return;
      const bool up_moves = std::find(part.begin(), part.end(), nodes_[u].up) !=
                            part.end();
      const MarkerId fk = node_split(u, part);
      marker_stamp_.resize(markers_.size(), 0);
      marker_state_.resize(markers_.size(), MarkState::Empty);
      if (up_moves) {
        mk.data[slot].up_state = fresh_state;
        mk.data[slot].up_is_root_leaf = false;
      } else {
        marker_stamp_[fk] = epoch_;
        marker_state_[fk] = fresh_state;
      }
    };
    do_split(pe.pstar, MarkState::Perfect);
    do_split(pe.estar, MarkState::Empty);
    // Rebuild this node's stamped lists from scratch.
    auto& d = mk.data[slot];
    d.perfect.clear();
    d.empty.clear();
    d.mixed.clear();
    d.bulk = 0;
    for (MarkerId m : nodes_[u].markers) {
      if (!markers_[m].alive || m == nodes_[u].up) continue;
      if (marker_stamp_[m] != epoch_) {
        marker_stamp_[m] = epoch_;
        marker_state_[m] = MarkState::Empty;
      }
      (marker_state_[m] == MarkState::Perfect ? d.perfect
       : marker_state_[m] == MarkState::Empty ? d.empty
                                              : d.mixed)
          .push_back(m);
    }
    if (static_cast<int>(nodes_[u].markers.size()) > 4)
      throw std::invalid_argument("clean: degenerate mixed node still too large");
  }
}

int SplitTree::contract_fully_mixed(Marking&, const Classification& cls,
                                    const DiagramHooks& hooks) {
  if (cls.case_id != 7 || cls.tm_edges.empty())
    throw std::invalid_argument("contract_fully_mixed: not a fully-mixed update");
  // Order the fully mixed edges into a path.
  std::vector<MarkerId> edges = cls.tm_edges;
  std::vector<std::pair<int, int>> ends;  // (node, edge index), adjacency
  auto count_at = [&](int node) {
    int c = 0;
    for (MarkerId m : edges) {
      if (markers_[m].node == node) ++c;
      if (markers_[markers_[m].opp_marker].node == node) ++c;
    }
    return c;
  };
  std::vector<MarkerId> path;
  if (edges.size() == 1) {
    path = edges;
  } else {
    // find an endpoint edge and walk
    MarkerId start = -1;
    for (MarkerId m : edges) {
      if (count_at(markers_[m].node) == 1) { start = m; break; }
      const int w = markers_[markers_[m].opp_marker].node;
      if (count_at(w) == 1) { start = m; break; }
    }
    if (start < 0)
      throw std::logic_error("contract_fully_mixed: mixed edges not a path");
    std::vector<char> used(edges.size(), 0);
    int cur;
    {
      const int a = markers_[start].node;
      cur = (count_at(a) == 1)
                ? markers_[markers_[start].opp_marker].node
                : a;
    }
    path.push_back(start);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == start) used[i] = 1;
    bool grown = true;
    while (path.size() < edges.size() && grown) {
      grown = false;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (used[i]) continue;
        const int a = markers_[edges[i]].node;
        const int b = markers_[markers_[edges[i]].opp_marker].node;
        if (a == cur || b == cur) {
          used[i] = 1;
          path.push_back(edges[i]);
          cur = (a == cur) ? b : a;
          grown = true;
          break;
        }
      }
    }
    if (path.size() != edges.size())
      throw std::logic_error("contract_fully_mixed: mixed edges not a path");
  }

  int kept = -1;
  for (MarkerId m : path) {
    const MarkerId r = markers_[m].opp_marker;
    const int a = markers_[m].node, b = markers_[r].node;
    int keep, absorb;
    MarkerId qk, qa;
    if (nodes_[b].up == r) {
      keep = a; absorb = b; qk = m; qa = r;
    } else {
      keep = b; absorb = a; qk = r; qa = m;
    }
    if (hooks.join) hooks.join(keep, absorb, qk, qa);
    kept = node_join(m);
  }
  return kept;
}

// --- insertion -----------------------------------------------------------------

bool SplitTree::insert_vertex_structure(Vertex x, Marking& mk, Classification cls,
                                        const DiagramHooks& hooks) {
  if (mk.epoch != epoch_)
    throw std::invalid_argument("insert_vertex_structure: stale marking");
  if (has_leaf(x)) throw std::invalid_argument("insert_vertex_structure: leaf exists");

  auto star_with_perfect_centre = [&](int u) {
    return nodes_[u].kind == NodeKind::Star &&
           state_of(mk, u, nodes_[u].centre) == MarkState::Perfect;
  };
  auto finish_at = [&](int node) {
    const MarkerId qx = new_marker(node);
    attach_leaf(qx, x);
    re_root(x);
    return qx;
  };

  switch (cls.case_id) {
    case 1:
    case 2: {
      finish_at(cls.node);
      return true;
    }
    case 3: {
      const int u = cls.node;
      std::vector<MarkerId> mp = mp_of(mk, u);
      if (hooks.prime_prepare && !hooks.prime_prepare(u, mp, {})) return false;
      const MarkerId qx = new_marker(u);
      for (MarkerId p : mp) add_label_edge(qx, p);
      attach_leaf(qx, x);
      if (hooks.insert_crossing) hooks.insert_crossing(u, qx);
      re_root(x);
      return true;
    }
    case 4: {
      const int u = cls.node;
      const bool clique_v = star_with_perfect_centre(u);
      PeSets pe = split_pe_sets(*this, u, mk.data[node_slot_[u]], epoch_,
                                marker_stamp_);
      MarkerId site;      // edge to subdivide
      bool centre_near;   // centre faces u's side of the subdivided edge
      if (pe.pstar.size() >= 2 && pe.estar.size() >= 2) {
        site = node_split(u, pe.pstar);
        marker_stamp_.resize(markers_.size(), 0);
        marker_state_.resize(markers_.size(), MarkState::Empty);
        centre_near = false;  // centre faces the split-off perfect node
      } else if (pe.pstar.size() == 1) {
        site = pe.pstar.front();
        centre_near = false;  // centre faces the old far side
      } else if (pe.estar.size() == 1) {
        site = pe.estar.front();
        centre_near = true;  // centre faces u
      } else {
        throw std::logic_error("insert_vertex_structure: bad hybrid shape");
      }
      const auto [v, vq, vo] = subdivide_edge(site);
      const MarkerId v3 = new_marker(v);
      attach_leaf(v3, x);
      if (clique_v) {
        nodes_[v].kind = NodeKind::Clique;
        nodes_[v].centre = -1;
      } else {
        nodes_[v].kind = NodeKind::Star;
        nodes_[v].centre = centre_near ? vq : vo;
      }
      re_root(x);
      return true;
    }
    case 5: {
      const auto sub = subdivide_edge(cls.edge_marker);
      const int v = sub[0];
      const MarkerId v3 = new_marker(v);
      attach_leaf(v3, x);
      nodes_[v].kind = NodeKind::Clique;
      nodes_[v].centre = -1;
      re_root(x);
      return true;
    }
    case 6: {
      // The centre pairs with the extremity whose far side is the empty one:
      // normally that is edge_marker itself, but for a pendant insertion the
      // empty side is the leaf opposite edge_marker.
      const auto sub = subdivide_edge(cls.edge_marker);
      const int v = sub[0];
      const MarkerId v3 = new_marker(v);
      attach_leaf(v3, x);
      nodes_[v].kind = NodeKind::Star;
      nodes_[v].centre = cls.centre_far ? sub[2] : sub[1];
      re_root(x);
      return true;
    }
    case 7: {
      std::vector<int> tm_nodes;
      for (MarkerId m : cls.tm_edges)
        for (int u : {markers_[m].node, markers_[markers_[m].opp_marker].node})
          if (std::find(tm_nodes.begin(), tm_nodes.end(), u) == tm_nodes.end())
            tm_nodes.push_back(u);
      for (int u : tm_nodes)
        if (mixed_of(mk, u).size() > 2) return false;  // no consecutive layout
      clean(mk, cls);
      for (int u : tm_nodes) {
        const std::vector<MarkerId> mp = mp_of(mk, u);
        const std::vector<MarkerId> mx = mixed_of(mk, u);
        if (nodes_[u].kind == NodeKind::Prime) {
          if (hooks.prime_prepare && !hooks.prime_prepare(u, mp, mx))
            return false;
        } else {
          if (hooks.degenerate_prepare &&
              !hooks.degenerate_prepare(u, nodes_[u].kind, nodes_[u].centre,
                                        nodes_[u].markers, mp, mx))
            return false;
        }
      }
      const int ux = contract_fully_mixed(mk, cls, hooks);
      // All surviving marked markers must now be perfect.
      std::vector<MarkerId> mp;
      for (MarkerId m : nodes_[ux].markers) {
        if (!markers_[m].alive) continue;
        const MarkState st = state_of(mk, ux, m);
        if (m == nodes_[ux].up) {
          const int slot = node_slot_[ux];
          if (mk.data[slot].up_state == MarkState::Mixed)
            throw std::logic_error("insert: dangling mixed marker after contraction");
          if (mk.data[slot].up_state == MarkState::Perfect) mp.push_back(m);
          continue;
        }
        if (marker_stamp_[m] != epoch_) continue;
        if (st == MarkState::Mixed)
          throw std::logic_error("insert: dangling mixed marker after contraction");
        if (st == MarkState::Perfect) mp.push_back(m);
      }
      const MarkerId qx = new_marker(ux);
      for (MarkerId p : mp) add_label_edge(qx, p);
      attach_leaf(qx, x);
      if (hooks.insert_crossing) hooks.insert_crossing(ux, qx);
      re_root(x);
      return true;
    }
    default:
      throw std::invalid_argument("insert_vertex_structure: bad case id");
  }
}

void SplitTree::re_root(Vertex leaf) {
  const MarkerId t = leaf_marker(leaf);
  std::vector<std::pair<int, MarkerId>> path;  // (node, old up marker)
  int cur = markers_[t].node;
  while (true) {
    const MarkerId up = nodes_[cur].up;
    path.emplace_back(cur, up);
    if (markers_[up].opp_marker < 0) break;
    cur = markers_[markers_[up].opp_marker].node;
  }
  nodes_[path[0].first].up = t;
  for (std::size_t i = 1; i < path.size(); ++i)
    nodes_[path[i].first].up = markers_[path[i - 1].second].opp_marker;
  root_leaf_ = leaf;
}

// --- validation -----------------------------------------------------------------

std::vector<std::string> SplitTree::validate(const Graph* g,
                                             int primality_limit) const {
  std::vector<std::string> issues;
  auto fail = [&](std::string msg) { issues.push_back(std::move(msg)); };

  int alive_nodes = 0, internal_half_edges = 0;
  for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
    const NodeRec& nd = nodes_[u];
    if (!nd.alive) continue;
    ++alive_nodes;
    int alive_markers = 0;
    for (MarkerId m : nd.markers) {
      const MarkerRec& rec = markers_[m];
      if (!rec.alive) { fail("node keeps dead marker"); continue; }
      ++alive_markers;
      if (rec.node != u) fail("marker node field mismatch");
      if (rec.opp_marker >= 0) {
        ++internal_half_edges;
        if (markers_[rec.opp_marker].opp_marker != m)
          fail("marker pairing not symmetric");
      } else if (rec.opp_leaf >= 0) {
        if (leaf_marker_[rec.opp_leaf] != m) fail("leaf pointer mismatch");
      } else {
        fail("marker attached to nothing");
      }
    }
    if (alive_markers < 3) fail("node with fewer than 3 markers");
    if (nd.kind == NodeKind::Star &&
        (nd.centre < 0 || !markers_[nd.centre].alive ||
         markers_[nd.centre].node != u))
      fail("star without valid centre");
    if (nd.up < 0 || !markers_[nd.up].alive || markers_[nd.up].node != u)
      fail("node without valid up marker");
    if (nd.kind == NodeKind::Prime) {
      for (MarkerId m : nd.markers) {
        for (MarkerId nb : markers_[m].nbrs) {
          if (!markers_[nb].alive || markers_[nb].node != u)
            fail("prime adjacency points outside node");
          const auto& back = markers_[nb].nbrs;
          if (std::find(back.begin(), back.end(), m) == back.end())
            fail("prime adjacency not symmetric");
        }
      }
    }
  }
  if (alive_nodes > 0 && internal_half_edges != 2 * (alive_nodes - 1))
    fail("internal edge count does not match a tree");

  // Root orientation: every node's up chain reaches the root leaf.
  if (alive_nodes > 0) {
    if (root_leaf_ < 0 || !has_leaf(root_leaf_)) {
      fail("missing root leaf");
    } else {
      for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
        if (!nodes_[u].alive) continue;
        int cur = u, steps = 0;
        while (steps++ <= alive_nodes) {
          const MarkerId up = nodes_[cur].up;
          if (up < 0) break;
          const MarkerId opp = markers_[up].opp_marker;
          if (opp < 0) {
            if (markers_[up].opp_leaf != root_leaf_)
              fail("up chain ends at a non-root leaf");
            break;
          }
          cur = markers_[opp].node;
        }
        if (steps > alive_nodes) { fail("up chain cycles"); break; }
      }
    }
  }

  // Reduced form and label shapes.
  for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
    const NodeRec& nd = nodes_[u];
    if (!nd.alive) continue;
    for (MarkerId m : nd.markers) {
      if (!markers_[m].alive) continue;
      const MarkerId opp = markers_[m].opp_marker;
      if (opp < 0 || opp < m) continue;  // visit each internal edge once
      const NodeRec& wd = nodes_[markers_[opp].node];
      if (nd.kind == NodeKind::Clique && wd.kind == NodeKind::Clique)
        fail("adjacent clique labels");
      if (nd.kind == NodeKind::Star && wd.kind == NodeKind::Star) {
        const bool c1 = nd.centre == m, c2 = wd.centre == opp;
        if (c1 != c2) fail("star labels joined centre to non-centre");
      }
    }
    const int k = static_cast<int>(nd.markers.size());
    if (nd.kind == NodeKind::Prime && k <= primality_limit && k >= 1) {
      Graph label(k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (label_adjacent(nd.markers[i], nd.markers[j])) label.add_edge(i, j);
      if (!is_prime(label)) fail("prime label is not prime");
    }
  }

  if (g != nullptr) {
    const Graph acc = accessibility_graph(g->vertex_count());
    for (Vertex v = 0; v < g->vertex_count(); ++v) {
      const auto a = acc.neighbors(v);
      const auto b = g->neighbors(v);
      if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
        fail("accessibility does not match the graph");
        break;
      }
    }
  }
  return issues;
}

std::vector<std::string> validate_split_tree(const SplitTree& t, const Graph& g) {
  return t.validate(&g);
}

void SplitTree::dump(std::ostream& os) const {
  for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
    const NodeRec& nd = nodes_[u];
    if (!nd.alive) continue;
    os << "node " << u << ' ' << kind_name(nd.kind);
    if (nd.kind == NodeKind::Star) os << " centre=m" << nd.centre;
    os << " up=m" << nd.up << '\n';
    for (MarkerId m : nd.markers) {
      if (!markers_[m].alive) continue;
      os << "  m" << m << " -> ";
      if (markers_[m].opp_leaf >= 0) os << "leaf " << markers_[m].opp_leaf;
      else os << 'm' << markers_[m].opp_marker;
      if (nd.kind == NodeKind::Prime) {
        os << " nbrs:";
        std::vector<MarkerId> nb = markers_[m].nbrs;
        std::sort(nb.begin(), nb.end());
        for (MarkerId x : nb) os << " m" << x;
      }
      os << '\n';
    }
  }
}

}  // namespace cg
