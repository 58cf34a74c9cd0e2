// Consistent symmetric cycles: a reflection-invariant doubly-linked encoding
// of chord diagrams supporting O(1) splicing (circle-joins, chord insertion)
// and O(|MP|) consecutiveness tests.
//
// Chord c owns endpoints 2c and 2c+1 in a flat arena shared by all diagrams
// living in one CscStore; a diagram is addressed by a Csc handle (an anchor
// endpoint plus the neighbour to visit first, which fixes the reading
// direction). Every endpoint has two successor links, slot 0 ("plus") and
// slot 1 ("minus"); consistency means both plus links of a chord point into
// the same arc between its endpoints.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "circlegraph/chord_word.hpp"

namespace cg {

// Diagram handle: walk starts at anchor_ep, steps to anchor_next, and keeps
// taking the out-neighbour different from the endpoint just left.
struct Csc {
  int anchor_ep = -1;
  int anchor_next = -1;
};

// Factor boundary: the factor reads first_ep .. last_ep (equal when it is a
// single endpoint); before_first/after_last are the cycle neighbours just
// outside. Bookend chords are chord_of(first_ep) and chord_of(last_ep).
struct ConsecutiveWitness {
  int first_ep = -1;
  int last_ep = -1;
  int before_first = -1;
  int after_last = -1;
};

enum class DegenerateKind { Clique, Star };

class CscStore {
 public:
  static int chord_of(int ep) { return ep >> 1; }
  static int partner(int ep) { return ep ^ 1; }
  static int ep1(int chord) { return 2 * chord; }
  static int ep2(int chord) { return 2 * chord + 1; }

  int link(int ep, int slot) const { return links_[static_cast<std::size_t>(ep)][slot]; }
  bool chord_alive(int chord) const;

  // The cycle neighbour of ep other than `not_this` (requires ep to have two
  // distinct neighbours, i.e. the cycle has length >= 3).
  int other_neighbor(int ep, int not_this) const;

  // Builds the cycle for a word (chord ids arbitrary non-negative, not
  // currently alive in this store). Plus links of each chord point into the
  // arc between its two occurrences in the given linearization, which makes
  // the result consistent. The anchor reproduces the word exactly.
  Csc csc_from_word(const ChordWord& w);

  ChordWord word_from_csc(const Csc& c) const;

  // Same diagram read in the opposite direction (no link mutation).
  Csc reversed_handle(const Csc& c) const;

  // One oriented traversal assigns ranks; a chord is consistent iff its two
  // plus targets fall on the same side of its endpoint pair.
  bool check_consistent(const Csc& c) const;

  int cycle_length(const Csc& c) const;

  // Consecutiveness in a prime-node diagram: returns a factor containing
  // exactly one endpoint of every chord of mp — with every chord of `mixed`
  // (|mixed| <= 2, mixed ⊆ mp) a bookend — or nullopt. O(|mp|) via four
  // capped walks.
  std::optional<ConsecutiveWitness> consecutive_test_prime(
      const Csc& c, std::span<const int> mp, std::span<const int> mixed);

  struct DiagramWithWitness {
    Csc csc;
    ConsecutiveWitness witness;
  };

  // Builds a clique (AA) or star (cAcA^r) diagram over <=4 chords in which
  // mp is consecutive with the mixed chords as bookends; nullopt if no such
  // diagram exists. Throws std::invalid_argument on >4 chords.
  std::optional<DiagramWithWitness> build_degenerate_diagram(
      DegenerateKind kind, std::span<const int> chords, int centre,
      std::span<const int> mp, std::span<const int> mixed);

  // Splices two diagrams at bookend chords q (of wu) and r (of wv), choosing
  // the join variant that keeps (set(wu) \ {q}) ∪ (set(wv) \ {r}) consecutive
  // with the surviving bookends. Constant link reassignments; q and r die.
  // Requires both witnessed sets to have >= 2 chords.
  DiagramWithWitness circle_join(const Csc& cu, int q,
                                 const ConsecutiveWitness& wu, const Csc& cv,
                                 int r, const ConsecutiveWitness& wv);

  // Witness-free splice of the two distinct cycles holding chords q and r:
  // every chord crossing q ends up crossing every chord crossing r, and both
  // sides otherwise keep their diagrams. Used when folding a whole tree into
  // one diagram, where no factor bookkeeping is needed.
  Csc plain_join(int q, int r);

  // Splices a fresh chord around the witnessed factor so it crosses exactly
  // the chords with one endpoint inside (single-endpoint factors allowed).
  Csc insert_chord(const Csc& c, const ConsecutiveWitness& w, int new_chord);

 private:
  void ensure_chord(int chord);
  void set_links(int ep, int plus, int minus);
  void replace_slot(int ep, int old_target, int new_target);
  void mark_dead(int chord);

  std::vector<std::array<int, 2>> links_;  // per endpoint: {plus, minus}
  std::vector<char> alive_;                // per chord
  // Scratch (epoch-stamped, so no clearing between calls).
  mutable std::vector<int> rank_, rank_epoch_;
  mutable int rank_epoch_counter_ = 0;
  std::vector<int> mp_stamp_, mixed_stamp_;
  std::vector<int> lwalk_stamp_, lwalk_pos_, rwalk_stamp_, rwalk_pos_;
  int chord_stamp_counter_ = 0;
};

}  // namespace cg
