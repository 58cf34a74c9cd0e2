#include <random>
#include <stdexcept>
#include <vector>

#include "circlegraph/graph.hpp"
#include "circlegraph/lbfs.hpp"
#include "circlegraph/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cg::Graph;
using cg::Vertex;
using test_util::make_graph;

TEST_CASE("lbfs on a path visits it end to end") {
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  const auto ord = cg::lbfs(path, 0);
  CHECK(ord.order == std::vector<Vertex>{0, 1, 2});
  CHECK(ord.position == std::vector<int>{0, 1, 2});
}

TEST_CASE("lbfs breaks label ties toward the lowest id") {
  const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(cg::lbfs(k3, 0).order == std::vector<Vertex>{0, 1, 2});
  CHECK(cg::lbfs(k3, 2).order == std::vector<Vertex>{2, 0, 1});
}

TEST_CASE("lbfs rejects disconnected graphs and bad starts") {
  const Graph two = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(cg::lbfs(two, 0), std::invalid_argument);
  const Graph k2 = make_graph(2, {{0, 1}});
  CHECK_THROWS_AS(cg::lbfs(k2, 2), std::invalid_argument);
  CHECK_THROWS_AS(cg::lbfs(k2, -1), std::invalid_argument);
}

TEST_CASE("four-point check accepts and rejects hand orderings") {
  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(cg::is_lbfs(path, std::vector<Vertex>{0, 1, 2}));
  // 0 < 2 < 1 with 0-1 an edge and 0-2 not: no earlier witness exists.
  CHECK_FALSE(cg::is_lbfs(path, std::vector<Vertex>{0, 2, 1}));
  CHECK_THROWS_AS(cg::is_lbfs(path, std::vector<Vertex>{0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cg::is_lbfs(path, std::vector<Vertex>{0, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("lbfs of the fixture diagram graph is a valid ordering") {
  const auto named = test_util::parse_word(test_util::kFigDiagramWord);
  const Graph g = cg::interlacement(named.word).graph;
  const auto ord = cg::lbfs(g, named.id("a"));
  CHECK(ord.order[0] == named.id("a"));
  CHECK(cg::is_lbfs(g, ord.order));
}

TEST_CASE("lbfs output passes the four-point check on random graphs") {
  std::mt19937_64 rng(20260814);
  for (int round = 0; round < 500; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);  // 2..12
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    const long long m =
        n - 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                   max_m - (n - 1) + 1));
    const Graph g = cg::random_connected_graph(n, m, rng);
    const Vertex start = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    const auto ord = cg::lbfs(g, start);
    REQUIRE(cg::is_lbfs(g, ord.order));
    for (int i = 0; i < n; ++i)
      CHECK(ord.position[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(i)])] == i);
  }
}

TEST_CASE("every prefix of an lbfs ordering is an lbfs of the prefix graph") {
  std::mt19937_64 rng(4711);
  for (int round = 0; round < 60; ++round) {
    const int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    const Graph g = cg::random_connected_graph(n, n + 4, rng);
    const auto ord = cg::lbfs(g, 0);
    for (int k = 1; k <= n; ++k) {
      std::vector<Vertex> prefix(ord.order.begin(), ord.order.begin() + k);
      const auto sub = induced_subgraph(g, test_util::sorted(prefix));
      std::vector<Vertex> mapped;
      for (const Vertex v : prefix)
        mapped.push_back(sub.to_new[static_cast<std::size_t>(v)]);
      REQUIRE(cg::is_lbfs(sub.graph, mapped));
    }
  }
}

TEST_CASE("dropping a universal front vertex leaves an lbfs ordering") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng() % 6);  // base graph size
    const Graph base = cg::random_connected_graph(n, n + 2, rng);
    Graph g(n + 1);
    for (Vertex v = 0; v < n; ++v) {
      for (const Vertex w : base.neighbors(v))
        if (v < w) g.add_edge(v, w);
      g.add_edge(v, n);  // vertex n sees everyone
    }
    const auto ord = cg::lbfs(g, n);
    REQUIRE(ord.order[0] == n);
    const std::vector<Vertex> rest(ord.order.begin() + 1, ord.order.end());
    CHECK(cg::is_lbfs(base, rest));
  }
}
