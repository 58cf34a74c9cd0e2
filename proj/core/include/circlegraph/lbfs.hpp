// Lexicographic breadth-first search: linear-time generation by partition
// refinement and the cubic four-point validity check used as a test oracle.
#pragma once

#include <span>
#include <vector>

#include "circlegraph/graph.hpp"

namespace cg {

struct LbfsOrdering {
  std::vector<Vertex> order;  // order[i] = i-th visited vertex
  std::vector<int> position;  // inverse: position[v] = rank of v
};

// LBFS ordering starting at `start`. Ties (equal labels) are broken toward
// the lowest vertex id, making the output deterministic.
// Throws std::invalid_argument if g is disconnected or start is invalid.
LbfsOrdering lbfs(const Graph& g, Vertex start);

// Four-point characterization: sigma is an LBFS ordering iff for all
// a <σ b <σ c with ac ∈ E and ab ∉ E there is d <σ a with db ∈ E, dc ∉ E.
// O(n^3)-ish; intended for tests. Throws if sigma is not a permutation.
bool is_lbfs(const Graph& g, std::span<const Vertex> sigma);

}  // namespace cg
