// Chord diagrams as circular double-occurrence words: interlacement graphs,
// induced subdiagrams, word-level circle-joins, factor scans, and
// rotation/reflection comparisons.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "circlegraph/graph.hpp"

namespace cg {

struct Endpoint {
  int chord = 0;
  int index = 1;  // 1 or 2
  bool operator==(const Endpoint&) const = default;
};

// Circular word; element 0 follows the last element.
using ChordWord = std::vector<Endpoint>;

// Sorted distinct chord ids occurring in w.
std::vector<int> word_chords(const ChordWord& w);

// Throws std::invalid_argument unless every chord occurs exactly once per
// endpoint index.
void check_double_occurrence(const ChordWord& w);

struct Interlacement {
  Graph graph;                 // on 0..k-1
  std::vector<int> chord_ids;  // vertex -> chord id (sorted ascending)
};

// Interlacement graph: chords x,y adjacent iff exactly one endpoint of y
// lies on the arc between x's endpoints.
Interlacement interlacement(const ChordWord& w);

// Convenience for words whose chord ids are already dense 0..k-1.
Graph interlacement_graph(const ChordWord& w);

// Deletes all endpoints of chords outside `keep`.
ChordWord induced_word(const ChordWord& w, std::span<const int> keep);

enum class JoinVariant {
  Direct,            // (C,q) ⊙ (C',q')
  Swapped,           // (C,q) ⊙̂ (C',q')  =  (C',q') ⊙ (C,q)
  DirectReflected,   // (C,q) ⊙ (C'^r,q')
  SwappedReflected,  // (C,q) ⊙̂ (C'^r,q')
};

// Word-level circle-join: with arcs written C(q1,q2) = the factor strictly
// between q's endpoints reading forward, the Direct variant is
// C(q1,q2) C'(q'1,q'2) C(q2,q1) C'(q'2,q'1); the other variants swap the
// operands and/or reflect C' first. Chord sets must be disjoint apart from
// nothing: the result is on (chords(C) \ {q}) ∪ (chords(C') \ {q'}).
ChordWord circle_join_word(const ChordWord& c, int q, const ChordWord& cp,
                           int qp, JoinVariant variant);

ChordWord reflected(const ChordWord& w);

// Name sequence with endpoint indices erased (the "simple" view used for
// diagram equality).
std::vector<int> simple_word(const ChordWord& w);

// Equality of circular words up to rotation (and optionally reflection),
// compared on the simple view.
bool rotation_equal(const std::vector<int>& a, const std::vector<int>& b);
bool rotation_reflection_equal(const std::vector<int>& a,
                               const std::vector<int>& b);
bool same_diagram(const ChordWord& a, const ChordWord& b);  // rot+refl

struct WordFactor {
  int start = 0;  // index into the word
  int length = 0;
  int first_chord = 0;  // bookends
  int last_chord = 0;
};

// All factors containing exactly one endpoint of each chord of s and nothing
// else. Test-grade O(|w|·|s|) scan.
std::vector<WordFactor> find_factors(const ChordWord& w, std::span<const int> s);

}  // namespace cg
