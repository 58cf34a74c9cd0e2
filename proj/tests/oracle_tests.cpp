#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "circlegraph/chord_word.hpp"
#include "circlegraph/graph.hpp"
#include "circlegraph/oracle.hpp"
#include "circlegraph/recognizer.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cg::ChordWord;
using cg::Graph;
using cg::Vertex;
using test_util::make_graph;
using test_util::sorted;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const Vertex w : g.neighbors(v))
      if (v < w)
        out.add_edge(perm[static_cast<std::size_t>(v)],
                     perm[static_cast<std::size_t>(w)]);
  return out;
}

Graph wheel5() {
  Graph g(6);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5);
  }
  return g;
}

}  // namespace

TEST_CASE("diagram enumeration") {
  SUBCASE("counts follow the double factorial") {
    const auto count = [](int n) {
      long long c = 0;
      cg::enumerate_diagrams(n, [&](const ChordWord&) {
        ++c;
        return true;
      });
      return c;
    };
    CHECK(count(1) == 1);
    CHECK(count(2) == 3);
    CHECK(count(3) == 15);
    CHECK(count(4) == 105);
    CHECK(count(5) == 945);
  }
  SUBCASE("visits are distinct, canonical, early-stoppable") {
    std::set<std::vector<int>> seen;
    cg::enumerate_diagrams(3, [&](const ChordWord& w) {
      cg::check_double_occurrence(w);
      REQUIRE(w.size() == 6);
      // Chords appear numbered in order of first occurrence.
      int next = 0;
      std::vector<bool> open(3, false);
      for (const auto& e : w) {
        if (!open[static_cast<std::size_t>(e.chord)]) {
          REQUIRE(e.chord == next);
          ++next;
          open[static_cast<std::size_t>(e.chord)] = true;
        }
      }
      REQUIRE(seen.insert(cg::simple_word(w)).second);
      return true;
    });
    CHECK(seen.size() == 15);

    int visits = 0;
    cg::enumerate_diagrams(4, [&](const ChordWord&) { return ++visits < 7; });
    CHECK(visits == 7);
  }
  SUBCASE("four-chord diagrams cover every four-vertex graph shape") {
    // Chords are numbered by first appearance, so only one labelling per
    // abstract diagram is visited; count isomorphism classes instead.
    std::vector<int> perm{0, 1, 2, 3};
    const auto iso_key = [&](const Graph& g) {
      unsigned best = ~0u;
      std::vector<int> p = perm;
      do {
        const Graph h = permuted(g, p);
        unsigned mask = 0, bit = 0;
        for (int v = 0; v < 4; ++v)
          for (int u = v + 1; u < 4; ++u, ++bit)
            if (h.has_edge(v, u)) mask |= 1u << bit;
        best = std::min(best, mask);
      } while (std::next_permutation(p.begin(), p.end()));
      return best;
    };
    std::set<unsigned> classes;
    cg::enumerate_diagrams(4, [&](const ChordWord& w) {
      classes.insert(iso_key(cg::diagram_graph(w)));
      return true;
    });
    // All 11 four-vertex graphs are circle graphs.
    CHECK(classes.size() == 11);
  }
  SUBCASE("rejects out-of-range sizes") {
    CHECK_THROWS_AS(cg::enumerate_diagrams(10, [](const ChordWord&) {
      return true;
    }),
                    std::invalid_argument);
  }
}

TEST_CASE("exhaustive recognition agrees with enumeration") {
  SUBCASE("triangle and five-cycle") {
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto w3 = cg::brute_force_diagram(k3);
    REQUIRE(w3.has_value());
    CHECK(cg::same_diagram(*w3, test_util::parse_word("a1 b1 c1 a2 b2 c2").word));
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    const auto w5 = cg::brute_force_diagram(c5);
    REQUIRE(w5.has_value());
    CHECK(cg::diagram_graph(*w5) == c5);
  }
  SUBCASE("the five-spoke wheel has no diagram") {
    CHECK_FALSE(cg::brute_force_diagram(wheel5()).has_value());
    CHECK_FALSE(cg::brute_force_is_circle(wheel5()));
  }
  SUBCASE("cross-validation over all small connected graphs") {
    for (const Graph& g : cg::connected_graphs_up_to(5)) {
      const int n = g.vertex_count();
      const auto found = cg::brute_force_diagram(g);
      if (found) {
        REQUIRE(cg::diagram_graph(*found) == g);
        continue;
      }
      // No labelled diagram may hit any permutation of g.
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
      bool realizable = false;
      do {
        const Graph target = permuted(g, perm);
        cg::enumerate_diagrams(n, [&](const ChordWord& w) {
          if (cg::diagram_graph(w) == target) realizable = true;
          return !realizable;
        });
      } while (!realizable && std::next_permutation(perm.begin(), perm.end()));
      REQUIRE_FALSE(realizable);
    }
  }
  SUBCASE("rejects graphs beyond the search cap") {
    Graph big(10);
    for (int v = 1; v < 10; ++v) big.add_edge(0, v);
    CHECK_THROWS_AS(cg::brute_force_diagram(big), std::invalid_argument);
  }
}

TEST_CASE("split enumeration") {
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(cg::brute_force_splits(c5).empty());
  CHECK(cg::is_prime(c5));

  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto p4_splits = cg::brute_force_splits(p4);
  REQUIRE(p4_splits.size() == 1);
  CHECK(sorted(p4_splits[0]) == std::vector<Vertex>{0, 1});
  CHECK_FALSE(cg::is_prime(p4));

  const Graph k4 =
      make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::set<std::vector<Vertex>> k4_sides;
  for (const auto& side : cg::brute_force_splits(k4)) k4_sides.insert(sorted(side));
  CHECK(k4_sides == std::set<std::vector<Vertex>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(cg::is_prime(k4));

  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(cg::brute_force_splits(star).size() == 3);
  CHECK_FALSE(cg::is_prime(star));

  // Too small to be prime, too small to split.
  CHECK_FALSE(cg::is_prime(make_graph(3, {{0, 1}, {1, 2}})));

  Graph big(16);
  for (int v = 1; v < 16; ++v) big.add_edge(0, v);
  CHECK_THROWS_AS(cg::brute_force_splits(big), std::invalid_argument);
}

TEST_CASE("connected graph catalogue") {
  const auto upto5 = cg::connected_graphs_up_to(5);
  CHECK(upto5.size() == 31);
  std::vector<int> by_n(6, 0);
  for (const Graph& g : upto5) {
    REQUIRE(cg::is_connected(g));
    ++by_n[static_cast<std::size_t>(g.vertex_count())];
  }
  CHECK(by_n == std::vector<int>{0, 1, 1, 2, 6, 21});
  CHECK(cg::connected_graphs_up_to(6).size() == 143);
  CHECK_THROWS_AS(cg::connected_graphs_up_to(7), std::invalid_argument);
}

TEST_CASE("random generators are deterministic and well-formed") {
  SUBCASE("connected graphs") {
    std::mt19937_64 a(7), b(7);
    const Graph g1 = cg::random_connected_graph(12, 20, a);
    const Graph g2 = cg::random_connected_graph(12, 20, b);
    CHECK(g1 == g2);
    CHECK(cg::is_connected(g1));
    CHECK(g1.edge_count() == 20);
    // m clamps to the tree and complete-graph bounds.
    std::mt19937_64 c(7);
    CHECK(cg::random_connected_graph(8, 0, c).edge_count() == 7);
    CHECK(cg::random_connected_graph(5, 1000, c).edge_count() == 10);
  }
  SUBCASE("diagrams") {
    std::mt19937_64 a(13), b(13);
    const ChordWord w1 = cg::random_diagram(9, a);
    const ChordWord w2 = cg::random_diagram(9, b);
    CHECK(w1 == w2);
    cg::check_double_occurrence(w1);
    CHECK(cg::word_chords(w1).size() == 9);
  }
  SUBCASE("windowed diagrams") {
    std::mt19937_64 rng(3);
    const ChordWord w = cg::windowed_random_diagram(40, 4, rng);
    cg::check_double_occurrence(w);
    CHECK(w.size() == 80);
    // Window one always pairs adjacent positions: no crossings at all.
    const ChordWord nested = cg::windowed_random_diagram(10, 1, rng);
    CHECK(cg::diagram_graph(nested).edge_count() == 0);
    // Non-positive windows fall back to the uniform generator.
    std::mt19937_64 a(99), b(99);
    CHECK(cg::windowed_random_diagram(6, 0, a) == cg::random_diagram(6, b));
  }
  SUBCASE("sweep interlacement matches the quadratic one") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 50; ++round) {
      const ChordWord w = cg::random_diagram(2 + static_cast<int>(rng() % 10), rng);
      CHECK(cg::diagram_graph(w) == cg::interlacement_graph(w));
    }
  }
}

TEST_CASE("search-ending vertices") {
  const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(sorted(cg::good_vertices(p3)) == std::vector<Vertex>{0, 2});
  const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(sorted(cg::good_vertices(k3)) == std::vector<Vertex>{0, 1, 2});
  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(sorted(cg::good_vertices(p4)) == std::vector<Vertex>{0, 3});
  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(sorted(cg::good_vertices(star)) == std::vector<Vertex>{1, 2, 3});
  Graph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK(sorted(cg::good_vertices(c4)) == std::vector<Vertex>{0, 1, 2, 3});
}
