#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "circlegraph/graph.hpp"
#include "circlegraph/lbfs.hpp"
#include "circlegraph/oracle.hpp"
#include "circlegraph/recognizer.hpp"
#include "circlegraph/split_tree.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cg::Graph;
using cg::MarkerId;
using cg::MarkState;
using cg::NodeKind;
using cg::SplitTree;
using cg::Vertex;
using test_util::make_graph;
using test_util::sorted;

namespace {

// Runs the incremental recognizer over an LBFS order of g; nullopt when some
// insertion is refused.
std::optional<cg::RecognizerState> build_state(const Graph& g) {
  cg::RecognizerState st;
  const auto order = cg::lbfs(g, 0).order;
  for (const Vertex x : order) {
    std::vector<Vertex> nbrs;
    for (const Vertex u : g.neighbors(x))
      if (st.has_vertex(u)) nbrs.push_back(u);
    if (!cg::insert_vertex(st, x, nbrs)) return std::nullopt;
  }
  return st;
}

std::multiset<NodeKind> alive_kinds(const SplitTree& t) {
  std::multiset<NodeKind> out;
  for (const int u : t.alive_nodes()) out.insert(t.kind(u));
  return out;
}

// Check a marking's stamped states (and the bulk/up summaries) against the
// definitional marker states.
void check_marking_against_definition(const SplitTree& t, const cg::Marking& mk,
                                      const std::vector<Vertex>& s) {
  std::set<int> touched_set(mk.touched.begin(), mk.touched.end());
  for (const Vertex v : s) {
    REQUIRE(t.leaf_marker(v) >= 0);
    REQUIRE(touched_set.count(t.marker_node(t.leaf_marker(v))) == 1);
  }
  for (std::size_t i = 0; i < mk.touched.size(); ++i) {
    const int u = mk.touched[i];
    const auto& d = mk.data[i];
    std::set<MarkerId> stamped;
    for (const MarkerId q : d.perfect) {
      REQUIRE(test_util::definitional_state(t, q, s) == MarkState::Perfect);
      stamped.insert(q);
    }
    for (const MarkerId q : d.empty) {
      REQUIRE(test_util::definitional_state(t, q, s) == MarkState::Empty);
      stamped.insert(q);
    }
    for (const MarkerId q : d.mixed) {
      REQUIRE(test_util::definitional_state(t, q, s) == MarkState::Mixed);
      stamped.insert(q);
    }
    const MarkerId up = t.up_marker(u);
    int unstamped = 0;
    for (const MarkerId q : t.markers(u)) {
      if (q == up || stamped.count(q)) continue;
      ++unstamped;
      REQUIRE(test_util::definitional_state(t, q, s) == MarkState::Empty);
    }
    REQUIRE(unstamped == d.bulk);
    if (d.has_up && up >= 0)
      REQUIRE(test_util::definitional_state(t, up, s) == d.up_state);
  }
}

}  // namespace

TEST_CASE("seeding with three leaves") {
  SUBCASE("triangle") {
    SplitTree t;
    t.init_three(0, 1, 2, -1);
    REQUIRE(t.alive_nodes().size() == 1);
    const int u = t.alive_nodes()[0];
    CHECK(t.kind(u) == NodeKind::Clique);
    CHECK(t.markers(u).size() == 3);
    CHECK(t.accessibility_graph(3) ==
          make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    for (const MarkerId q : t.markers(u)) {
      const Vertex l = t.opposite_leaf(q);
      REQUIRE(l >= 0);
      CHECK(t.leaf_marker(l) == q);
      CHECK(t.accessible_leaves(q) == std::vector<Vertex>{l});
    }
    CHECK(t.validate(nullptr).empty());
  }
  SUBCASE("path through the middle vertex") {
    SplitTree t;
    t.init_three(0, 1, 2, 1);
    const int u = t.alive_nodes().at(0);
    CHECK(t.kind(u) == NodeKind::Star);
    CHECK(t.opposite_leaf(t.centre(u)) == 1);
    const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(t.accessibility_graph(3) == p3);
    CHECK(cg::validate_split_tree(t, p3).empty());
    // Validation against the wrong graph reports the mismatch.
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(t.validate(&k3).empty());
  }
}

TEST_CASE("tree of the fifteen-leaf example graph") {
  const Graph g = make_graph(15, test_util::kTreeExampleEdges);
  const auto st = build_state(g);
  REQUIRE(st.has_value());
  const SplitTree& t = st->tree;
  CHECK(cg::validate_split_tree(t, g).empty());

  const auto kinds = alive_kinds(t);
  REQUIRE(kinds ==
          std::multiset<NodeKind>{NodeKind::Clique, NodeKind::Clique,
                                  NodeKind::Star, NodeKind::Star,
                                  NodeKind::Prime});

  // The two star centres sit opposite the hub leaves 2 and 13.
  std::set<Vertex> hubs;
  for (const int u : t.alive_nodes())
    if (t.kind(u) == NodeKind::Star) hubs.insert(t.opposite_leaf(t.centre(u)));
  CHECK(hubs == std::set<Vertex>{2, 13});

  // The prime label has five markers, three of them opposite leaves 0, 1, 6.
  int prime = -1;
  for (const int u : t.alive_nodes())
    if (t.kind(u) == NodeKind::Prime) prime = u;
  REQUIRE(prime >= 0);
  REQUIRE(t.markers(prime).size() == 5);
  std::set<Vertex> prime_leaves;
  for (const MarkerId q : t.markers(prime))
    if (t.opposite_leaf(q) >= 0) prime_leaves.insert(t.opposite_leaf(q));
  CHECK(prime_leaves == std::set<Vertex>{0, 1, 6});

  // The clique next to leaf 14 looks into the prime node through a marker
  // whose accessible set is {0, 2, 3, 6}.
  int side_clique = -1;
  for (const int u : t.alive_nodes()) {
    if (t.kind(u) != NodeKind::Clique) continue;
    for (const MarkerId q : t.markers(u))
      if (t.opposite_leaf(q) == 14) side_clique = u;
  }
  REQUIRE(side_clique >= 0);
  MarkerId into_prime = -1;
  for (const MarkerId q : t.markers(side_clique)) {
    const MarkerId opp = t.opposite_marker(q);
    if (opp >= 0 && t.marker_node(opp) == prime) into_prime = q;
  }
  REQUIRE(into_prime >= 0);
  CHECK(sorted(t.accessible_leaves(into_prime)) ==
        std::vector<Vertex>{0, 2, 3, 6});

  // Re-rooting is invisible to the represented graph.
  SplitTree copy = t;
  copy.re_root(0);
  CHECK(copy.root_leaf() == 0);
  CHECK(copy.accessibility_graph(15) == g);
  CHECK(cg::validate_split_tree(copy, g).empty());
}

TEST_CASE("node split and join are inverse and preserve accessibility") {
  SUBCASE("clique node") {
    const Graph k4 =
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto st = build_state(k4);
    REQUIRE(st.has_value());
    SplitTree& t = st->tree;
    REQUIRE(t.alive_nodes().size() == 1);
    const int u = t.alive_nodes()[0];
    REQUIRE(t.kind(u) == NodeKind::Clique);

    const std::vector<MarkerId> part{t.leaf_marker(0), t.leaf_marker(1)};
    const MarkerId fresh = t.node_split(u, part);
    REQUIRE(t.marker_alive(fresh));
    CHECK(t.alive_nodes().size() == 2);
    CHECK(t.accessibility_graph(4) == k4);
    // Two adjacent cliques violate reduced form, and validate says so.
    CHECK_FALSE(t.validate(&k4).empty());

    const int joined = t.node_join(fresh);
    CHECK(t.marker_node(t.leaf_marker(2)) == joined);
    CHECK(t.alive_nodes().size() == 1);
    CHECK(t.accessibility_graph(4) == k4);
    CHECK(t.validate(&k4).empty());
  }
  SUBCASE("star node") {
    const Graph s5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto st = build_state(s5);
    REQUIRE(st.has_value());
    SplitTree& t = st->tree;
    REQUIRE(t.alive_nodes().size() == 1);
    const int u = t.alive_nodes()[0];
    REQUIRE(t.kind(u) == NodeKind::Star);
    REQUIRE(t.opposite_leaf(t.centre(u)) == 0);

    const std::vector<MarkerId> part{t.leaf_marker(3), t.leaf_marker(4)};
    const MarkerId fresh = t.node_split(u, part);
    CHECK(t.alive_nodes().size() == 2);
    CHECK(t.accessibility_graph(5) == s5);

    t.node_join(fresh);
    CHECK(t.alive_nodes().size() == 1);
    CHECK(t.accessibility_graph(5) == s5);
    CHECK(t.validate(&s5).empty());
  }
}

TEST_CASE("marking states match their definition") {
  SUBCASE("exhaustive small circle graphs, all subsets") {
    for (const Graph& g : cg::connected_graphs_up_to(5)) {
      if (g.vertex_count() < 3) continue;
      const auto st = build_state(g);
      if (!st) continue;  // not a circle graph
      const int n = g.vertex_count();
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
          if (mask & (1 << v)) s.push_back(v);
        SplitTree t = st->tree;  // mark() stamps scratch; keep the original
        const cg::Marking mk = t.mark(s);
        check_marking_against_definition(t, mk, s);
      }
    }
  }
  SUBCASE("random diagrams, random subsets") {
    std::mt19937_64 rng(99);
    int built = 0;
    for (int round = 0; round < 1500 && built < 120; ++round) {
      const int n = 4 + static_cast<int>(rng() % 6);  // 4..9
      const Graph g = cg::diagram_graph(cg::random_diagram(n, rng));
      if (!cg::is_connected(g)) continue;
      const auto st = build_state(g);
      REQUIRE(st.has_value());  // interlacement graphs are circle graphs
      ++built;
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
          if (rng() % 2) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
        SplitTree t = st->tree;
        const cg::Marking mk = t.mark(s);
        check_marking_against_definition(t, mk, s);
      }
    }
    REQUIRE(built >= 100);
  }
}

TEST_CASE("classification of the canonical markings") {
  SUBCASE("every marker perfect on a clique") {
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto st = build_state(k3);
    REQUIRE(st.has_value());
    SplitTree& t = st->tree;
    const std::vector<Vertex> s{0, 1, 2};
    const cg::Marking mk = t.mark(s);
    const auto cls = t.classify(mk);
    REQUIRE(cls.has_value());
    CHECK(cls->case_id == 1);
    CHECK(cls->node == t.alive_nodes()[0]);
  }
  SUBCASE("twin of a leaf uses the leaf edge") {
    const Graph p3 = make_graph(3, {{0, 1}, {0, 2}});
    auto st = build_state(p3);
    REQUIRE(st.has_value());
    SplitTree& t = st->tree;
    const std::vector<Vertex> s{0, 1};  // closed neighbourhood of vertex 1
    const cg::Marking mk = t.mark(s);
    const auto cls = t.classify(mk);
    REQUIRE(cls.has_value());
    CHECK(cls->case_id == 5);
    CHECK(t.opposite_leaf(cls->edge_marker) == 1);
  }
  SUBCASE("pendant vertex splits a star off the leaf edge") {
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto st = build_state(k3);
    REQUIRE(st.has_value());
    SplitTree& t = st->tree;
    const std::vector<Vertex> s{0};
    cg::Marking mk = t.mark(s);
    auto cls = t.classify(mk);
    REQUIRE(cls.has_value());
    CHECK(cls->case_id == 6);
    CHECK(cls->centre_far);
    CHECK(cls->edge_marker == t.leaf_marker(0));

    // Applying the update gives the pendant graph; no diagram hooks fire.
    REQUIRE(t.insert_vertex_structure(3, mk, *cls, cg::DiagramHooks{}));
    const Graph grown = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(t.accessibility_graph(4) == grown);
    CHECK(cg::validate_split_tree(t, grown).empty());
    // The new star's centre pairs with the old leaf, not with the new one.
    const int star = t.marker_node(t.leaf_marker(3));
    REQUIRE(t.kind(star) == NodeKind::Star);
    CHECK(t.opposite_leaf(t.centre(star)) == 0);
  }
  SUBCASE("marked leaves two nodes apart give a fully mixed path") {
    const Graph g = make_graph(15, test_util::kTreeExampleEdges);
    const auto st = build_state(g);
    REQUIRE(st.has_value());
    SplitTree t = st->tree;
    const std::vector<Vertex> s{1, 4};
    const cg::Marking mk = t.mark(s);
    const auto cls = t.classify(mk);
    REQUIRE(cls.has_value());
    REQUIRE(cls->case_id == 7);
    REQUIRE(cls->tm_edges.size() == 2);

    int prime = -1, mid_clique = -1, far_star = -1;
    for (const int u : t.alive_nodes()) {
      if (t.kind(u) == NodeKind::Prime) prime = u;
      for (const MarkerId q : t.markers(u)) {
        if (t.kind(u) == NodeKind::Clique && t.opposite_leaf(q) == 3)
          mid_clique = u;
        if (t.kind(u) == NodeKind::Star && t.opposite_leaf(q) == 4)
          far_star = u;
      }
    }
    REQUIRE(prime >= 0);
    REQUIRE(mid_clique >= 0);
    REQUIRE(far_star >= 0);
    std::set<std::pair<int, int>> tm;
    for (const MarkerId q : cls->tm_edges) {
      REQUIRE(t.marker_alive(q));
      const int a = t.marker_node(q);
      const int b = t.marker_node(t.opposite_marker(q));
      tm.insert({std::min(a, b), std::max(a, b)});
    }
    const auto edge = [](int a, int b) {
      return std::pair<int, int>{std::min(a, b), std::max(a, b)};
    };
    CHECK(tm == std::set<std::pair<int, int>>{edge(prime, mid_clique),
                                              edge(mid_clique, far_star)});
  }
}

TEST_CASE("cleaning and contracting the fully mixed subtree") {
  std::mt19937_64 rng(512);
  int case7 = 0;
  for (int round = 0; round < 600 && case7 < 60; ++round) {
    const int n = 5 + static_cast<int>(rng() % 5);  // 5..9
    const Graph g = cg::diagram_graph(cg::random_diagram(n, rng));
    if (!cg::is_connected(g)) continue;
    const auto st = build_state(g);
    REQUIRE(st.has_value());
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    if (s.size() < 2) continue;

    SplitTree t = st->tree;
    cg::Marking mk = t.mark(s);
    auto cls = t.classify(mk);
    if (!cls || cls->case_id != 7) continue;
    ++case7;

    t.clean(mk, *cls);
    CHECK(t.accessibility_graph(n) == g);
    // Degenerate nodes on the fully mixed path are now as small as splits
    // allow: at most four markers, and a same-side group of two or more
    // survives only when the rest of the node is a single marker (splitting
    // it off would leave fewer than two markers behind).
    std::set<int> tm_nodes;
    for (const MarkerId q : cls->tm_edges) {
      tm_nodes.insert(t.marker_node(q));
      tm_nodes.insert(t.marker_node(t.opposite_marker(q)));
    }
    for (const int u : tm_nodes) {
      if (t.kind(u) == NodeKind::Prime) continue;
      const auto* d = mk.find(u);
      REQUIRE(d != nullptr);
      const std::size_t size = t.markers(u).size();
      CHECK(size <= 4);
      std::size_t pstar = 0;  // perfect non-centre markers
      std::size_t estar = 0;  // empty or perfect-centre markers
      for (const MarkerId m : d->perfect)
        (m == t.centre(u) ? estar : pstar) += 1;
      estar += d->empty.size() + static_cast<std::size_t>(d->bulk);
      if (d->has_up) {
        if (d->up_state == MarkState::Perfect)
          (t.up_marker(u) == t.centre(u) ? estar : pstar) += 1;
        else if (d->up_state == MarkState::Empty)
          estar += 1;
      }
      if (pstar >= 2) CHECK(size - pstar <= 1);
      if (estar >= 2) CHECK(size - estar <= 1);
    }

    int joins = 0;
    cg::DiagramHooks hooks;
    hooks.join = [&](int, int, MarkerId, MarkerId) { ++joins; };
    const int survivor = t.contract_fully_mixed(mk, *cls, hooks);
    CHECK(joins == static_cast<int>(cls->tm_edges.size()));
    CHECK(t.marker_alive(t.up_marker(survivor)));
    CHECK(t.accessibility_graph(n) == g);
  }
  REQUIRE(case7 >= 40);
}

TEST_CASE("structural updates after full insertions") {
  SUBCASE("universal vertex grows the clique") {
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto st = build_state(k3);
    REQUIRE(st.has_value());
    REQUIRE(cg::insert_vertex(*st, 3, std::vector<Vertex>{0, 1, 2}));
    const SplitTree& t = st->tree;
    REQUIRE(t.alive_nodes().size() == 1);
    const int u = t.alive_nodes()[0];
    CHECK(t.kind(u) == NodeKind::Clique);
    CHECK(t.markers(u).size() == 4);
    for (const MarkerId q : t.markers(u)) CHECK(t.opposite_leaf(q) >= 0);
  }
  SUBCASE("twin insertion splits off a clique pair") {
    const Graph p3 = make_graph(3, {{0, 1}, {0, 2}});
    auto st = build_state(p3);
    REQUIRE(st.has_value());
    REQUIRE(cg::insert_vertex(*st, 3, std::vector<Vertex>{0, 1}));
    const Graph grown = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}});
    CHECK(st->tree.accessibility_graph(4) == grown);
    CHECK(cg::validate_split_tree(st->tree, grown).empty());
    CHECK(alive_kinds(st->tree) ==
          std::multiset<NodeKind>{NodeKind::Clique, NodeKind::Star});
  }
  SUBCASE("pendant insertion splits off a star") {
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto st = build_state(k3);
    REQUIRE(st.has_value());
    REQUIRE(cg::insert_vertex(*st, 3, std::vector<Vertex>{0}));
    const Graph grown = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(st->tree.accessibility_graph(4) == grown);
    CHECK(cg::validate_split_tree(st->tree, grown).empty());
    const auto kinds = alive_kinds(st->tree);
    CHECK(kinds == std::multiset<NodeKind>{NodeKind::Clique, NodeKind::Star});
    for (const int u : st->tree.alive_nodes())
      if (st->tree.kind(u) == NodeKind::Star)
        CHECK(st->tree.opposite_leaf(st->tree.centre(u)) == 0);
  }
}
