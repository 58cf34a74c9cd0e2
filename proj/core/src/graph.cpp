#include "circlegraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cg {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[static_cast<std::size_t>(u)];
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph r;
  r.to_old.assign(s.begin(), s.end());
  std::sort(r.to_old.begin(), r.to_old.end());
  if (std::adjacent_find(r.to_old.begin(), r.to_old.end()) != r.to_old.end())
    throw std::invalid_argument("duplicate vertex in induced set");
  r.to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < r.to_old.size(); ++i) {
    Vertex v = r.to_old[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("invalid vertex in induced set");
    r.to_new[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  r.graph = Graph(static_cast<int>(r.to_old.size()));
  for (std::size_t i = 0; i < r.to_old.size(); ++i) {
    for (Vertex w : g.neighbors(r.to_old[i])) {
      int j = r.to_new[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) r.graph.add_edge(static_cast<int>(i), j);
    }
  }
  return r;
}

}  // namespace cg
