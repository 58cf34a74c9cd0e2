// Small-instance reference implementations used to cross-check the
// incremental recognizer: exhaustive diagram search, split enumeration,
// graph generators and LBFS-ending enumeration. Everything here favours
// obviousness over speed and guards against inputs it cannot handle.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "circlegraph/chord_word.hpp"
#include "circlegraph/graph.hpp"

namespace cg {

// Visits every chord diagram on chords 0..n-1 once, canonically labelled so
// that chords are numbered in order of first appearance (so position 0 is
// always chord 0's first endpoint). Stops early if the visitor returns
// false. Throws for n > 9 ((2n-1)!! grows too fast beyond that).
void enumerate_diagrams(int n,
                        const std::function<bool(const ChordWord&)>& visit);

// Exhaustive recognizer: finds a diagram whose crossing graph is exactly g
// (same vertex labels), or nullopt. Pruned backtracking, n <= 9.
std::optional<ChordWord> brute_force_diagram(const Graph& g);
bool brute_force_is_circle(const Graph& g);

// All splits of g, each reported as the side containing its smallest vertex;
// both sides have >= 2 vertices. Bitmask enumeration, n <= 15.
std::vector<std::vector<Vertex>> brute_force_splits(const Graph& g);

// A graph is prime when it is connected, has >= 4 vertices and admits no
// split.
bool is_prime(const Graph& g);

// Every connected graph with 1..max_n vertices, one representative per
// isomorphism class (canonical form: lexicographically smallest adjacency
// bitstring over all vertex permutations). max_n <= 6.
std::vector<Graph> connected_graphs_up_to(int max_n);

// Uniformly random spanning tree plus random distinct extra edges; m is
// clamped to [n-1, n(n-1)/2].
Graph random_connected_graph(int n, long long m, std::mt19937_64& rng);

// Uniformly random chord diagram on n chords.
ChordWord random_diagram(int n, std::mt19937_64& rng);

// Random chord diagram whose matching, built left to right, always pairs the
// first unmatched position with one of the next `window` unmatched positions
// (window >= 1), keeping every chord short and the crossing count near
// n*window/2. window <= 0 falls back to random_diagram.
ChordWord windowed_random_diagram(int n, int window, std::mt19937_64& rng);

// Interlacement graph of a diagram with dense chord ids 0..n-1, computed in
// O(n + crossings) by one sweep (unlike interlacement_graph, which compares
// all chord pairs and is meant for small words).
Graph diagram_graph(const ChordWord& w);

// Vertices at which some lexicographic breadth-first search of g can end.
// Backtracking over tie-breaking choices; intended for small graphs.
std::vector<Vertex> good_vertices(const Graph& g);

}  // namespace cg
