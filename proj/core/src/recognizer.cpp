#include "circlegraph/recognizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "circlegraph/lbfs.hpp"

namespace cg {

namespace {

void ensure_node_slots(RecognizerState& st, int node) {
  if (static_cast<int>(st.node_diag.size()) <= node) {
    st.node_diag.resize(static_cast<std::size_t>(node) + 1);
    st.node_wit.resize(static_cast<std::size_t>(node) + 1);
  }
}

DiagramHooks make_hooks(RecognizerState& st) {
  DiagramHooks h;
  h.prime_prepare = [&st](int node, std::span<const MarkerId> mp,
                          std::span<const MarkerId> mixed) {
    ensure_node_slots(st, node);
    const auto w = st.store.consecutive_test_prime(st.node_diag[node], mp, mixed);
    if (!w) return false;
    st.node_wit[static_cast<std::size_t>(node)] = *w;
    return true;
  };
  h.degenerate_prepare = [&st](int node, NodeKind kind, MarkerId centre,
                               std::span<const MarkerId> chords,
                               std::span<const MarkerId> mp,
                               std::span<const MarkerId> mixed) {
    ensure_node_slots(st, node);
    const auto r = st.store.build_degenerate_diagram(
        kind == NodeKind::Clique ? DegenerateKind::Clique : DegenerateKind::Star,
        chords, centre, mp, mixed);
    if (!r) return false;
    st.node_diag[static_cast<std::size_t>(node)] = r->csc;
    st.node_wit[static_cast<std::size_t>(node)] = r->witness;
    return true;
  };
  h.join = [&st](int kept, int absorbed, MarkerId q_kept, MarkerId q_absorbed) {
    const auto r = st.store.circle_join(
        st.node_diag[static_cast<std::size_t>(kept)], q_kept,
        st.node_wit[static_cast<std::size_t>(kept)],
        st.node_diag[static_cast<std::size_t>(absorbed)], q_absorbed,
        st.node_wit[static_cast<std::size_t>(absorbed)]);
    st.node_diag[static_cast<std::size_t>(kept)] = r.csc;
    st.node_wit[static_cast<std::size_t>(kept)] = r.witness;
  };
  h.insert_crossing = [&st](int node, MarkerId new_chord) {
    ensure_node_slots(st, node);
    st.node_diag[static_cast<std::size_t>(node)] =
        st.store.insert_chord(st.node_diag[static_cast<std::size_t>(node)],
                              st.node_wit[static_cast<std::size_t>(node)],
                              new_chord);
  };
  return h;
}

}  // namespace

bool RecognizerState::has_vertex(Vertex v) const {
  if (!tree.empty()) return tree.has_leaf(v);
  return std::find(inserted.begin(), inserted.end(), v) != inserted.end();
}

bool insert_vertex(RecognizerState& st, Vertex x,
                   std::span<const Vertex> neighbors) {
  if (st.rejected)
    throw std::invalid_argument("insert_vertex: state already rejected a vertex");
  if (x < 0) throw std::invalid_argument("insert_vertex: negative vertex id");
  if (st.has_vertex(x))
    throw std::invalid_argument("insert_vertex: vertex already inserted");
  std::vector<Vertex> s(neighbors.begin(), neighbors.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("insert_vertex: duplicate neighbour");
  for (const Vertex nb : s)
    if (!st.has_vertex(nb))
      throw std::invalid_argument("insert_vertex: unknown neighbour");

  const std::size_t placed = st.inserted.size();
  if (placed == 0) {
    st.inserted.push_back(x);
    return true;
  }
  if (placed == 1) {
    st.bootstrap_edge = !s.empty();
    st.inserted.push_back(x);
    return true;
  }
  if (placed == 2) {
    const Vertex a = st.inserted[0], b = st.inserted[1];
    const bool ax = std::find(s.begin(), s.end(), a) != s.end();
    const bool bx = std::find(s.begin(), s.end(), b) != s.end();
    const int edges = (st.bootstrap_edge ? 1 : 0) + (ax ? 1 : 0) + (bx ? 1 : 0);
    if (edges < 2)
      throw std::invalid_argument("insert_vertex: inserted graph is disconnected");
    Vertex centre = -1;  // three edges: triangle
    if (edges == 2) {
      if (st.bootstrap_edge && ax) centre = a;
      else if (st.bootstrap_edge && bx) centre = b;
      else centre = x;
    }
    st.tree.init_three(a, b, x, centre);
    st.inserted.push_back(x);
    return true;
  }

  Marking mk = st.tree.mark(s);
  const auto cls = st.tree.classify(mk);
  if (!cls) {
    st.rejected = true;
    return false;
  }
  const DiagramHooks hooks = make_hooks(st);
  if (!st.tree.insert_vertex_structure(x, mk, *cls, hooks)) {
    st.rejected = true;
    return false;
  }
  st.inserted.push_back(x);
  return true;
}

ChordWord extract_diagram(const RecognizerState& st) {
  if (st.rejected)
    throw std::invalid_argument("extract_diagram: state rejected a vertex");
  if (st.inserted.empty()) return {};
  if (st.tree.empty()) {
    const Vertex a = st.inserted[0];
    if (st.inserted.size() == 1) return ChordWord{{a, 1}, {a, 2}};
    const Vertex b = st.inserted[1];
    if (st.bootstrap_edge) return ChordWord{{a, 1}, {b, 1}, {a, 2}, {b, 2}};
    return ChordWord{{a, 1}, {a, 2}, {b, 1}, {b, 2}};
  }

  // Fold a scratch copy: give the degenerate labels their generic diagrams,
  // then splice every tree edge away; what survives is one chord per leaf.
  CscStore store = st.store;
  std::vector<Csc> diag = st.node_diag;
  const std::vector<int> nodes = st.tree.alive_nodes();
  diag.resize(std::max(diag.size(), static_cast<std::size_t>(nodes.back()) + 1));
  for (const int u : nodes) {
    if (st.tree.kind(u) == NodeKind::Prime) continue;
    const auto& ms = st.tree.markers(u);
    ChordWord w;
    w.reserve(2 * ms.size());
    if (st.tree.kind(u) == NodeKind::Clique) {
      for (const MarkerId m : ms) w.push_back({m, 1});
      for (const MarkerId m : ms) w.push_back({m, 2});
    } else {
      const MarkerId c = st.tree.centre(u);
      w.push_back({c, 1});
      for (const MarkerId m : ms)
        if (m != c) w.push_back({m, 1});
      w.push_back({c, 2});
      for (auto it = ms.rbegin(); it != ms.rend(); ++it)
        if (*it != c) w.push_back({*it, 2});
    }
    diag[static_cast<std::size_t>(u)] = store.csc_from_word(w);
  }

  Csc merged = diag[static_cast<std::size_t>(nodes.front())];
  std::size_t folds = 0;
  for (const int u : nodes) {
    for (const MarkerId m : st.tree.markers(u)) {
      const MarkerId opp = st.tree.opposite_marker(m);
      if (opp < 0 || opp < m) continue;  // leaf edge, or already folded
      merged = store.plain_join(m, opp);
      ++folds;
    }
  }
  if (folds + 1 != nodes.size())
    throw std::logic_error("extract_diagram: tree edges do not form a tree");

  const ChordWord raw = store.word_from_csc(merged);
  ChordWord out;
  out.reserve(raw.size());
  Vertex maxv = 0;
  for (const Vertex v : st.inserted) maxv = std::max(maxv, v);
  std::vector<char> opened(static_cast<std::size_t>(maxv) + 1, 0);
  for (const Endpoint& e : raw) {
    const Vertex v = st.tree.opposite_leaf(e.chord);
    if (v < 0)
      throw std::logic_error("extract_diagram: surviving chord is not a leaf");
    out.push_back({v, opened[static_cast<std::size_t>(v)] ? 2 : 1});
    opened[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

bool certify(const Graph& g, const ChordWord& w) {
  const int n = g.vertex_count();
  if (w.size() != 2 * static_cast<std::size_t>(n)) return false;
  if (n == 0) return true;

  // One sweep around the circle keeps the open chords in insertion order; a
  // chord crosses exactly the chords still open behind it when it closes, so
  // every crossing pair is reported once, at the earlier closing.
  std::vector<char> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
  std::vector<int> nxt(static_cast<std::size_t>(n), -1);
  std::vector<int> prv(static_cast<std::size_t>(n), -1);
  int tail = -1;
  const std::size_t m = g.edge_count();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (const Endpoint& e : w) {
    const int v = e.chord;
    if (v < 0 || v >= n) return false;
    const auto sv = static_cast<std::size_t>(v);
    if (state[sv] == 0) {
      state[sv] = 1;
      prv[sv] = tail;
      nxt[sv] = -1;
      if (tail >= 0) nxt[static_cast<std::size_t>(tail)] = v;
      tail = v;
    } else if (state[sv] == 1) {
      for (int u = nxt[sv]; u >= 0; u = nxt[static_cast<std::size_t>(u)]) {
        if (pairs.size() == m) return false;  // more crossings than edges
        pairs.emplace_back(v, u);
      }
      if (prv[sv] >= 0) nxt[static_cast<std::size_t>(prv[sv])] = nxt[sv];
      if (nxt[sv] >= 0) prv[static_cast<std::size_t>(nxt[sv])] = prv[sv];
      if (tail == v) tail = prv[sv];
      state[sv] = 2;
    } else {
      return false;  // third occurrence
    }
  }
  for (int v = 0; v < n; ++v)
    if (state[static_cast<std::size_t>(v)] != 2) return false;
  if (pairs.size() != m) return false;

  std::vector<std::vector<int>> partners(static_cast<std::size_t>(n));
  for (const auto& [a, b] : pairs) {
    partners[static_cast<std::size_t>(a)].push_back(b);
    partners[static_cast<std::size_t>(b)].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    auto& lst = partners[static_cast<std::size_t>(v)];
    std::sort(lst.begin(), lst.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(lst.begin(), lst.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

RecognizeResult recognize(const Graph& g) {
  RecognizeResult res;
  for (const auto& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const LbfsOrdering ord = lbfs(sub.graph, 0);
    RecognizerState st;
    std::vector<char> placed(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
    std::vector<Vertex> s;
    for (const Vertex x : ord.order) {
      s.clear();
      for (const Vertex nb : sub.graph.neighbors(x))
        if (placed[static_cast<std::size_t>(nb)]) s.push_back(nb);
      if (!insert_vertex(st, x, s)) {
        res.is_circle = false;
        res.failed_vertex = sub.to_old[static_cast<std::size_t>(x)];
        res.failed_prefix.clear();
        for (const Vertex v : st.inserted)
          res.failed_prefix.push_back(sub.to_old[static_cast<std::size_t>(v)]);
        res.failed_prefix.push_back(res.failed_vertex);
        res.diagrams.clear();
        res.component_vertices.clear();
        return res;
      }
      placed[static_cast<std::size_t>(x)] = 1;
    }
    ChordWord w = extract_diagram(st);
    if (!certify(sub.graph, w))
      throw std::logic_error("recognize: extracted diagram fails certification");
    for (Endpoint& e : w) e.chord = sub.to_old[static_cast<std::size_t>(e.chord)];
    res.diagrams.push_back(std::move(w));
    res.component_vertices.push_back(comp);
  }
  return res;
}

}  // namespace cg
