#include "circlegraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace cg {

void enumerate_diagrams(int n,
                        const std::function<bool(const ChordWord&)>& visit) {
  if (n < 0 || n > 9)
    throw std::invalid_argument("enumerate_diagrams: n out of range");
  if (n == 0) {
    visit(ChordWord{});
    return;
  }
  const int len = 2 * n;
  std::vector<int> chord_at(static_cast<std::size_t>(len), -1);
  std::vector<int> index_at(static_cast<std::size_t>(len), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int next_chord) -> void {
    if (stop) return;
    int p = 0;
    while (p < len && chord_at[static_cast<std::size_t>(p)] >= 0) ++p;
    if (p == len) {
      ChordWord w(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i)
        w[static_cast<std::size_t>(i)] =
            Endpoint{chord_at[static_cast<std::size_t>(i)],
                     index_at[static_cast<std::size_t>(i)]};
      if (!visit(w)) stop = true;
      return;
    }
    for (int q = p + 1; q < len && !stop; ++q) {
      if (chord_at[static_cast<std::size_t>(q)] >= 0) continue;
      chord_at[static_cast<std::size_t>(p)] = next_chord;
      chord_at[static_cast<std::size_t>(q)] = next_chord;
      index_at[static_cast<std::size_t>(p)] = 1;
      index_at[static_cast<std::size_t>(q)] = 2;
      self(self, next_chord + 1);
      chord_at[static_cast<std::size_t>(p)] = -1;
      chord_at[static_cast<std::size_t>(q)] = -1;
    }
  };
  rec(rec, 0);
}

namespace {

// Backtracking word construction: at each position either open a chord for an
// unplaced vertex or close an open one. When chord u closes, its crossers are
// fully determined (chords with exactly one endpoint between u's endpoints),
// so the branch survives only if they equal N(u) exactly.
class DiagramSearch {
 public:
  explicit DiagramSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    adj_.resize(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v))
        adj_[static_cast<std::size_t>(v)] |= 1u << w;
  }

  std::optional<ChordWord> run() {
    if (n_ == 0) return ChordWord{};
    word_.clear();
    open_.clear();
    used_ = 0;
    // Any diagram can be rotated so that vertex 0 opens at position 0.
    open_chord(0);
    if (extend()) return build_word();
    return std::nullopt;
  }

 private:
  struct OpenChord {
    Vertex v;
    std::uint32_t committed;  // closed chords known to cross v
  };

  void open_chord(Vertex v) {
    word_.push_back(v);
    open_.push_back(OpenChord{v, 0});
    used_ |= 1u << v;
  }

  std::optional<int> close_chord(int open_idx) {
    // Returns the number of committed-crosser updates applied (for undo),
    // or nullopt if this close is infeasible.
    const OpenChord u = open_[static_cast<std::size_t>(open_idx)];
    std::uint32_t crossers = u.committed;
    for (int i = open_idx + 1; i < static_cast<int>(open_.size()); ++i)
      crossers |= 1u << open_[static_cast<std::size_t>(i)].v;
    if (crossers != adj_[static_cast<std::size_t>(u.v)]) return std::nullopt;
    // Chords opened before u and still open are nested around u: they must
    // not demand a crossing with it.
    for (int i = 0; i < open_idx; ++i)
      if (adj_[static_cast<std::size_t>(open_[static_cast<std::size_t>(i)].v)] &
          (1u << u.v))
        return std::nullopt;
    int updates = 0;
    for (int i = open_idx + 1; i < static_cast<int>(open_.size()); ++i) {
      OpenChord& w = open_[static_cast<std::size_t>(i)];
      // u opened before w and closes while w is open, so they cross.
      if (!(adj_[static_cast<std::size_t>(w.v)] & (1u << u.v))) {
        for (int j = open_idx + 1; j < i; ++j)
          open_[static_cast<std::size_t>(j)].committed &= ~(1u << u.v);
        return std::nullopt;
      }
      w.committed |= 1u << u.v;
      ++updates;
    }
    word_.push_back(u.v);
    open_.erase(open_.begin() + open_idx);
    return updates;
  }

  void undo_close(int open_idx, const OpenChord& u) {
    word_.pop_back();
    open_.insert(open_.begin() + open_idx, u);
    for (int i = open_idx + 1; i < static_cast<int>(open_.size()); ++i)
      open_[static_cast<std::size_t>(i)].committed &= ~(1u << u.v);
  }

  bool extend() {
    if (static_cast<int>(word_.size()) == 2 * n_) return open_.empty();
    // Closing first fails fast; openings explore fresh vertices in id order.
    for (int i = 0; i < static_cast<int>(open_.size()); ++i) {
      const OpenChord saved = open_[static_cast<std::size_t>(i)];
      if (close_chord(i)) {
        if (extend()) return true;
        undo_close(i, saved);
      }
    }
    if (static_cast<int>(word_.size()) < 2 * n_ - 1) {
      for (Vertex v = 0; v < n_; ++v) {
        if (used_ & (1u << v)) continue;
        open_chord(v);
        if (extend()) return true;
        open_.pop_back();
        word_.pop_back();
        used_ &= ~(1u << v);
      }
    }
    return false;
  }

  ChordWord build_word() const {
    ChordWord w;
    std::uint32_t seen = 0;
    for (const Vertex v : word_) {
      const bool first = !(seen & (1u << v));
      seen |= 1u << v;
      w.push_back(Endpoint{v, first ? 1 : 2});
    }
    return w;
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<Vertex> word_;
  std::vector<OpenChord> open_;
  std::uint32_t used_ = 0;
};

}  // namespace

std::optional<ChordWord> brute_force_diagram(const Graph& g) {
  if (g.vertex_count() > 9)
    throw std::invalid_argument("brute_force_diagram: graph too large");
  return DiagramSearch(g).run();
}

bool brute_force_is_circle(const Graph& g) {
  return brute_force_diagram(g).has_value();
}

std::vector<std::vector<Vertex>> brute_force_splits(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 15) throw std::invalid_argument("brute_force_splits: graph too large");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
  std::vector<std::vector<Vertex>> out;
  const std::uint32_t all = n >= 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t a = 1; a < all; a += 2) {  // vertex 0 stays on side A
    const std::uint32_t b = all & ~a;
    if (std::popcount(a) < 2 || std::popcount(b) < 2) continue;
    std::uint32_t common = 0;
    bool is_split = true;
    for (int v = 0; v < n && is_split; ++v) {
      if (!(a & (1u << v))) continue;
      const std::uint32_t nb = adj[static_cast<std::size_t>(v)] & b;
      if (nb == 0) continue;
      if (common == 0)
        common = nb;
      else if (common != nb)
        is_split = false;
    }
    if (!is_split) continue;
    std::vector<Vertex> side;
    for (int v = 0; v < n; ++v)
      if (a & (1u << v)) side.push_back(v);
    out.push_back(std::move(side));
  }
  return out;
}

bool is_prime(const Graph& g) {
  if (g.vertex_count() < 4 || !is_connected(g)) return false;
  return brute_force_splits(g).empty();
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("connected_graphs_up_to: max_n out of range");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_at;
    std::vector<std::vector<int>> pair_idx(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        pair_idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<int>(pair_at.size());
        pair_idx[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            static_cast<int>(pair_at.size());
        pair_at.emplace_back(i, j);
      }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<std::uint32_t> canon_masks;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      // Connectivity over the bitmask graph.
      std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
      for (int e = 0; e < pairs; ++e)
        if (mask & (1u << e)) {
          const auto [i, j] = pair_at[static_cast<std::size_t>(e)];
          adj[static_cast<std::size_t>(i)] |= 1u << j;
          adj[static_cast<std::size_t>(j)] |= 1u << i;
        }
      std::uint32_t reached = 1, frontier = 1;
      while (frontier != 0) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
          if (frontier & (1u << v)) next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~reached;
        reached |= next;
      }
      if (reached != (n >= 32 ? ~0u : (1u << n) - 1)) continue;
      std::iota(perm.begin(), perm.end(), 0);
      std::uint32_t best = mask;
      do {
        std::uint32_t m = 0;
        for (int e = 0; e < pairs; ++e)
          if (mask & (1u << e)) {
            const auto [i, j] = pair_at[static_cast<std::size_t>(e)];
            m |= 1u << pair_idx[static_cast<std::size_t>(
                perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(
                perm[static_cast<std::size_t>(j)])];
          }
        best = std::min(best, m);
      } while (std::next_permutation(perm.begin(), perm.end()));
      canon_masks.insert(best);
    }
    for (const std::uint32_t mask : canon_masks) {
      Graph g(n);
      for (int e = 0; e < pairs; ++e)
        if (mask & (1u << e))
          g.add_edge(pair_at[static_cast<std::size_t>(e)].first,
                     pair_at[static_cast<std::size_t>(e)].second);
      out.push_back(std::move(g));
    }
  }
  return out;
}

Graph random_connected_graph(int n, long long m, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n < 1");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  m = std::clamp(m, static_cast<long long>(n - 1), max_edges);
  Graph g(n);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(order[static_cast<std::size_t>(i)],
               order[static_cast<std::size_t>(pick(rng))]);
  }
  long long remaining = m - (n - 1);
  if (remaining <= 0) return g;
  if (max_edges <= (1 << 20)) {
    std::vector<std::pair<Vertex, Vertex>> non_edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (!g.has_edge(i, j)) non_edges.emplace_back(i, j);
    std::shuffle(non_edges.begin(), non_edges.end(), rng);
    for (long long k = 0; k < remaining; ++k)
      g.add_edge(non_edges[static_cast<std::size_t>(k)].first,
                 non_edges[static_cast<std::size_t>(k)].second);
    return g;
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  while (remaining > 0) {
    const Vertex i = pick(rng);
    const Vertex j = pick(rng);
    if (i == j || g.has_edge(i, j)) continue;
    g.add_edge(i, j);
    --remaining;
  }
  return g;
}

ChordWord random_diagram(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_diagram: n < 1");
  std::vector<int> slots(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) slots[static_cast<std::size_t>(i)] = i / 2;
  std::shuffle(slots.begin(), slots.end(), rng);
  ChordWord w;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const int c : slots) {
    w.push_back(Endpoint{c, seen[static_cast<std::size_t>(c)] ? 2 : 1});
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return w;
}

ChordWord windowed_random_diagram(int n, int window, std::mt19937_64& rng) {
  if (window <= 0) return random_diagram(n, rng);
  if (n < 1) throw std::invalid_argument("windowed_random_diagram: n < 1");
  const int len = 2 * n;
  // Unmatched positions as a forward-linked list: pairing the first free
  // position with the j-th free position after it (j <= window) costs O(j).
  std::vector<int> next_free(static_cast<std::size_t>(len) + 1);
  for (int i = 0; i <= len; ++i) next_free[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> slot_chord(static_cast<std::size_t>(len), -1);
  int first = 0;
  for (int c = 0; c < n; ++c) {
    const int p = first;
    int free_after = 0;
    for (int q = next_free[static_cast<std::size_t>(p)];
         q < len && free_after < window;
         q = next_free[static_cast<std::size_t>(q)])
      ++free_after;
    std::uniform_int_distribution<int> pick(1, free_after);
    const int j = pick(rng);
    int prev = p;
    for (int step = 1; step < j; ++step)
      prev = next_free[static_cast<std::size_t>(prev)];
    const int q = next_free[static_cast<std::size_t>(prev)];
    next_free[static_cast<std::size_t>(prev)] =
        next_free[static_cast<std::size_t>(q)];
    first = next_free[static_cast<std::size_t>(p)];
    slot_chord[static_cast<std::size_t>(p)] = c;
    slot_chord[static_cast<std::size_t>(q)] = c;
  }
  ChordWord w;
  w.reserve(static_cast<std::size_t>(len));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const int c : slot_chord) {
    w.push_back(Endpoint{c, seen[static_cast<std::size_t>(c)] ? 2 : 1});
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return w;
}

Graph diagram_graph(const ChordWord& w) {
  check_double_occurrence(w);
  const int n = static_cast<int>(w.size() / 2);
  // Sweep keeping open chords in opening order; a closing chord crosses
  // exactly the still-open chords that opened after it.
  std::vector<int> nxt(static_cast<std::size_t>(n), -1);
  std::vector<int> prv(static_cast<std::size_t>(n), -1);
  std::vector<char> open(static_cast<std::size_t>(n), 0);
  int tail = -1;
  std::vector<std::pair<int, int>> pairs;
  for (const Endpoint& e : w) {
    if (e.chord < 0 || e.chord >= n)
      throw std::invalid_argument("diagram_graph: chord ids must be dense");
    const auto c = static_cast<std::size_t>(e.chord);
    if (!open[c]) {
      open[c] = 1;
      prv[c] = tail;
      nxt[c] = -1;
      if (tail >= 0) nxt[static_cast<std::size_t>(tail)] = e.chord;
      tail = e.chord;
    } else {
      for (int u = nxt[c]; u >= 0; u = nxt[static_cast<std::size_t>(u)])
        pairs.emplace_back(e.chord, u);
      if (prv[c] >= 0) nxt[static_cast<std::size_t>(prv[c])] = nxt[c];
      if (nxt[c] >= 0) prv[static_cast<std::size_t>(nxt[c])] = prv[c];
      if (tail == e.chord) tail = prv[c];
    }
  }
  Graph g(n);
  for (const auto& [a, b] : pairs) g.add_edge(a, b);
  return g;
}

std::vector<Vertex> good_vertices(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("good_vertices: graph must be connected");
  const int n = g.vertex_count();
  std::vector<char> good(static_cast<std::size_t>(n), 0);
  using Classes = std::vector<std::vector<Vertex>>;
  auto rec = [&](auto&& self, const Classes& classes) -> void {
    if (classes.size() == 1 && classes[0].size() == 1) {
      good[static_cast<std::size_t>(classes[0][0])] = 1;
      return;
    }
    for (const Vertex v : classes.front()) {
      Classes next;
      for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        std::vector<Vertex> in, out;
        for (const Vertex w : classes[ci]) {
          if (w == v) continue;
          (g.has_edge(v, w) ? in : out).push_back(w);
        }
        if (!in.empty()) next.push_back(std::move(in));
        if (!out.empty()) next.push_back(std::move(out));
      }
      if (next.empty())
        good[static_cast<std::size_t>(v)] = 1;
      else
        self(self, next);
    }
  };
  Classes initial(1);
  initial[0].resize(static_cast<std::size_t>(n));
  std::iota(initial[0].begin(), initial[0].end(), 0);
  rec(rec, initial);
  return [&] {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (good[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  }();
}

}  // namespace cg
