#include "circlegraph/lbfs.hpp"

#include <stdexcept>

namespace cg {

namespace {

// Partition-refinement state: vertices sit in an ordered list of classes,
// each class keeping its members in an id-sorted doubly-linked list so the
// lowest-id tie-break is a head pop.
struct Refinement {
  std::vector<int> prev, next;          // member links within a class
  std::vector<int> cls;                 // class id per vertex
  std::vector<int> head, tail;          // per class
  std::vector<int> cls_prev, cls_next;  // class list links
  std::vector<int> buddy, buddy_epoch;  // split target per class, per pivot
  int first_class = -1;
  int epoch = 0;

  int new_class() {
    head.push_back(-1);
    tail.push_back(-1);
    cls_prev.push_back(-1);
    cls_next.push_back(-1);
    buddy.push_back(-1);
    buddy_epoch.push_back(-1);
    return static_cast<int>(head.size()) - 1;
  }

  void append(int c, int v) {
    cls[v] = c;
    prev[v] = tail[c];
    next[v] = -1;
    if (tail[c] >= 0)
      next[tail[c]] = v;
    else
      head[c] = v;
    tail[c] = v;
  }

  void unlink(int v) {
    int c = cls[v];
    if (prev[v] >= 0)
      next[prev[v]] = next[v];
    else
      head[c] = next[v];
    if (next[v] >= 0)
      prev[next[v]] = prev[v];
    else
      tail[c] = prev[v];
  }

  void insert_class_before(int c, int at) {
    cls_prev[c] = cls_prev[at];
    cls_next[c] = at;
    if (cls_prev[at] >= 0)
      cls_next[cls_prev[at]] = c;
    else
      first_class = c;
    cls_prev[at] = c;
  }

  void remove_class(int c) {
    if (cls_prev[c] >= 0)
      cls_next[cls_prev[c]] = cls_next[c];
    else
      first_class = cls_next[c];
    if (cls_next[c] >= 0) cls_prev[cls_next[c]] = cls_prev[c];
  }
};

}  // namespace

LbfsOrdering lbfs(const Graph& g, Vertex start) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n) throw std::invalid_argument("invalid start vertex");
  if (!is_connected(g)) throw std::invalid_argument("graph not connected");

  LbfsOrdering out;
  out.order.reserve(static_cast<std::size_t>(n));
  out.position.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return out;

  Refinement r;
  r.prev.assign(static_cast<std::size_t>(n), -1);
  r.next.assign(static_cast<std::size_t>(n), -1);
  r.cls.assign(static_cast<std::size_t>(n), -1);

  int c0 = r.new_class();
  r.append(c0, start);
  r.first_class = c0;
  if (n > 1) {
    int c1 = r.new_class();
    for (Vertex v = 0; v < n; ++v)
      if (v != start) r.append(c1, v);
    r.cls_next[c0] = c1;
    r.cls_prev[c1] = c0;
  }

  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  while (r.first_class >= 0) {
    int c = r.first_class;
    int v = r.head[c];
    r.unlink(v);
    if (r.head[c] < 0) r.remove_class(c);
    visited[static_cast<std::size_t>(v)] = 1;
    out.position[static_cast<std::size_t>(v)] = static_cast<int>(out.order.size());
    out.order.push_back(v);

    ++r.epoch;
    // Neighbors are visited in ascending id order, so appends keep each
    // split-off class id-sorted.
    for (Vertex w : g.neighbors(v)) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      int cw = r.cls[w];
      if (r.buddy_epoch[cw] != r.epoch) {
        int b = r.new_class();
        r.buddy[cw] = b;
        r.buddy_epoch[cw] = r.epoch;
        r.insert_class_before(b, cw);
      }
      r.unlink(w);
      r.append(r.buddy[cw], w);
      if (r.head[cw] < 0) r.remove_class(cw);
    }
  }
  return out;
}

bool is_lbfs(const Graph& g, std::span<const Vertex> sigma) {
  const int n = g.vertex_count();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("sigma is not a permutation of V");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = sigma[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("sigma is not a permutation of V");
    pos[static_cast<std::size_t>(v)] = i;
  }
  // For each ordered pair b <σ c, every a <σ b with ac ∈ E, ab ∉ E needs a
  // witness d <σ a with db ∈ E, dc ∉ E. Equivalently the earliest such a
  // must come after the earliest witness candidate.
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c = 0; c < n; ++c) {
      if (b == c || pos[b] >= pos[c]) continue;
      int min_a = n;
      for (Vertex v = 0; v < n; ++v)
        if (pos[v] < pos[b] && g.has_edge(v, c) && !g.has_edge(v, b))
          min_a = std::min(min_a, pos[v]);
      if (min_a == n) continue;
      int min_d = n;
      for (Vertex v = 0; v < n; ++v)
        if (g.has_edge(v, b) && !g.has_edge(v, c)) min_d = std::min(min_d, pos[v]);
      if (min_d >= min_a) return false;
    }
  }
  return true;
}

}  // namespace cg
