#include "circlegraph/csc.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace cg {

namespace {

int endpoint_id(const Endpoint& e) { return 2 * e.chord + (e.index - 1); }

Endpoint make_endpoint(int ep) { return Endpoint{ep >> 1, (ep & 1) + 1}; }

}  // namespace

void CscStore::ensure_chord(int chord) {
  if (chord < 0) throw std::invalid_argument("csc: negative chord id");
  const auto need = static_cast<std::size_t>(chord) + 1;
  if (alive_.size() < need) {
    alive_.resize(need, 0);
    links_.resize(2 * need, {-1, -1});
    rank_.resize(2 * need, 0);
    rank_epoch_.resize(2 * need, 0);
    mp_stamp_.resize(need, 0);
    mixed_stamp_.resize(need, 0);
    lwalk_stamp_.resize(need, 0);
    lwalk_pos_.resize(need, 0);
    rwalk_stamp_.resize(need, 0);
    rwalk_pos_.resize(need, 0);
  }
}

bool CscStore::chord_alive(int chord) const {
  return chord >= 0 && static_cast<std::size_t>(chord) < alive_.size() &&
         alive_[static_cast<std::size_t>(chord)] != 0;
}

void CscStore::set_links(int ep, int plus, int minus) {
  links_[static_cast<std::size_t>(ep)] = {plus, minus};
}

void CscStore::replace_slot(int ep, int old_target, int new_target) {
  auto& l = links_[static_cast<std::size_t>(ep)];
  if (l[0] == old_target) {
    l[0] = new_target;
  } else if (l[1] == old_target) {
    l[1] = new_target;
  } else {
    throw std::logic_error("csc: endpoint " + std::to_string(ep) +
                           " has no link to " + std::to_string(old_target));
  }
}

void CscStore::mark_dead(int chord) { alive_[static_cast<std::size_t>(chord)] = 0; }

int CscStore::other_neighbor(int ep, int not_this) const {
  const auto& l = links_[static_cast<std::size_t>(ep)];
  if (l[0] == not_this) return l[1];
  if (l[1] == not_this) return l[0];
  throw std::logic_error("csc: endpoint " + std::to_string(ep) +
                         " is not adjacent to " + std::to_string(not_this));
}

Csc CscStore::csc_from_word(const ChordWord& w) {
  check_double_occurrence(w);
  if (w.empty()) throw std::invalid_argument("csc_from_word: empty word");
  const int len = static_cast<int>(w.size());
  for (const Endpoint& e : w) {
    ensure_chord(e.chord);
    if (alive_[static_cast<std::size_t>(e.chord)])
      throw std::invalid_argument("csc_from_word: chord id already in use");
  }
  std::vector<int> seen_chords;
  seen_chords.reserve(w.size() / 2);
  for (int i = 0; i < len; ++i) {
    const int ch = w[static_cast<std::size_t>(i)].chord;
    const bool first_occurrence =
        std::find(seen_chords.begin(), seen_chords.end(), ch) == seen_chords.end();
    const int prev = endpoint_id(w[static_cast<std::size_t>((i + len - 1) % len)]);
    const int next = endpoint_id(w[static_cast<std::size_t>((i + 1) % len)]);
    const int ep = endpoint_id(w[static_cast<std::size_t>(i)]);
    if (first_occurrence) {
      seen_chords.push_back(ch);
      // Plus points forward, into the arc leading to the second occurrence.
      set_links(ep, next, prev);
    } else {
      // Plus points backward, into that same arc.
      set_links(ep, prev, next);
    }
  }
  for (const int ch : seen_chords) alive_[static_cast<std::size_t>(ch)] = 1;
  return Csc{endpoint_id(w[0]), endpoint_id(w[1])};
}

ChordWord CscStore::word_from_csc(const Csc& c) const {
  ChordWord out;
  const auto& l0 = links_[static_cast<std::size_t>(c.anchor_ep)];
  if (l0[0] == l0[1]) {  // single-chord diagram: two endpoints only
    out.push_back(make_endpoint(c.anchor_ep));
    out.push_back(make_endpoint(l0[0]));
    return out;
  }
  int prev = c.anchor_ep;
  int cur = c.anchor_next;
  out.push_back(make_endpoint(prev));
  while (cur != c.anchor_ep) {
    out.push_back(make_endpoint(cur));
    const int next = other_neighbor(cur, prev);
    prev = cur;
    cur = next;
    if (out.size() > links_.size())
      throw std::logic_error("word_from_csc: cycle does not close");
  }
  return out;
}

Csc CscStore::reversed_handle(const Csc& c) const {
  const auto& l = links_[static_cast<std::size_t>(c.anchor_ep)];
  if (l[0] == l[1]) return c;
  return Csc{c.anchor_ep, other_neighbor(c.anchor_ep, c.anchor_next)};
}

int CscStore::cycle_length(const Csc& c) const {
  const auto& l = links_[static_cast<std::size_t>(c.anchor_ep)];
  if (l[0] == l[1]) return 2;
  int count = 1;
  int prev = c.anchor_ep;
  int cur = c.anchor_next;
  while (cur != c.anchor_ep) {
    ++count;
    const int next = other_neighbor(cur, prev);
    prev = cur;
    cur = next;
    if (count > static_cast<int>(links_.size()))
      throw std::logic_error("cycle_length: cycle does not close");
  }
  return count;
}

bool CscStore::check_consistent(const Csc& c) const {
  const auto& l0 = links_[static_cast<std::size_t>(c.anchor_ep)];
  if (l0[0] == l0[1]) return true;  // one chord
  const int epoch = ++rank_epoch_counter_;
  std::vector<int> eps;
  int prev = c.anchor_ep;
  int cur = c.anchor_next;
  eps.push_back(prev);
  while (cur != c.anchor_ep) {
    eps.push_back(cur);
    const int next = other_neighbor(cur, prev);
    prev = cur;
    cur = next;
    if (eps.size() > links_.size())
      throw std::logic_error("check_consistent: cycle does not close");
  }
  for (int i = 0; i < static_cast<int>(eps.size()); ++i) {
    rank_[static_cast<std::size_t>(eps[static_cast<std::size_t>(i)])] = i;
    rank_epoch_[static_cast<std::size_t>(eps[static_cast<std::size_t>(i)])] = epoch;
  }
  for (const int ep : eps) {
    const int mate = partner(ep);
    if (mate < ep) continue;  // handle each chord once
    if (rank_epoch_[static_cast<std::size_t>(mate)] != epoch)
      throw std::logic_error("check_consistent: endpoint without partner on cycle");
    const int ea = rank_[static_cast<std::size_t>(ep)] < rank_[static_cast<std::size_t>(mate)] ? ep : mate;
    const int eb = partner(ea);
    const int pa = links_[static_cast<std::size_t>(ea)][0];
    const int pb = links_[static_cast<std::size_t>(eb)][0];
    const bool a_hits_b = (pa == eb);
    const bool b_hits_a = (pb == ea);
    if (a_hits_b || b_hits_a) {
      if (a_hits_b != b_hits_a) return false;  // one empty-side plus, one not
      continue;
    }
    const int ra = rank_[static_cast<std::size_t>(ea)];
    const int rb = rank_[static_cast<std::size_t>(eb)];
    const auto inside = [&](int x) {
      const int r = rank_[static_cast<std::size_t>(x)];
      return ra < r && r < rb;
    };
    if (inside(pa) != inside(pb)) return false;
  }
  return true;
}

std::optional<ConsecutiveWitness> CscStore::consecutive_test_prime(
    const Csc& c, std::span<const int> mp, std::span<const int> mixed) {
  if (mp.empty()) throw std::invalid_argument("consecutive_test_prime: empty mp");
  const int k = static_cast<int>(mp.size());
  const int mp_epoch = ++chord_stamp_counter_;
  for (const int ch : mp) {
    if (!chord_alive(ch))
      throw std::invalid_argument("consecutive_test_prime: chord not in diagram");
    mp_stamp_[static_cast<std::size_t>(ch)] = mp_epoch;
  }
  for (const int ch : mixed) {
    if (mp_stamp_[static_cast<std::size_t>(ch)] != mp_epoch)
      throw std::invalid_argument("consecutive_test_prime: mixed chord outside mp");
  }
  if (mixed.size() > 2) return std::nullopt;  // two bookends at most

  const int q = mp[0];
  if (k == 1) {
    const int ep = ep1(q);
    return ConsecutiveWitness{ep, ep, links_[static_cast<std::size_t>(ep)][0],
                              links_[static_cast<std::size_t>(ep)][1]};
  }

  for (const int qa : {ep1(q), ep2(q)}) {
    // Two capped walks away from qa; slot 0 direction feeds the "left" part
    // of the window, slot 1 the "right".
    const int walk_epoch = ++chord_stamp_counter_;
    std::vector<int> left, right;
    auto extend = [&](int first_step, std::vector<int>& out,
                      std::vector<int>& stamp, std::vector<int>& pos) {
      int prev = qa;
      int cur = first_step;
      while (static_cast<int>(out.size()) < k - 1) {
        const int ch = chord_of(cur);
        if (mp_stamp_[static_cast<std::size_t>(ch)] != mp_epoch) break;
        if (ch == q) break;                                       // partner of qa
        if (stamp[static_cast<std::size_t>(ch)] == walk_epoch) break;  // chord repeats
        stamp[static_cast<std::size_t>(ch)] = walk_epoch;
        pos[static_cast<std::size_t>(ch)] = static_cast<int>(out.size()) + 1;  // 1-based
        out.push_back(cur);
        const int next = other_neighbor(cur, prev);
        prev = cur;
        cur = next;
      }
    };
    extend(links_[static_cast<std::size_t>(qa)][0], left, lwalk_stamp_, lwalk_pos_);
    extend(links_[static_cast<std::size_t>(qa)][1], right, rwalk_stamp_, rwalk_pos_);

    // Valid windows take a endpoints from `left` and b = k-1-a from `right`
    // without using two endpoints of one chord: a chord at 1-based position i
    // in `left` and j in `right` forbids every a with a >= i and a <= k-1-j.
    std::vector<int> forbidden(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 1; j <= static_cast<int>(right.size()); ++j) {
      const int ch = chord_of(right[static_cast<std::size_t>(j - 1)]);
      if (lwalk_stamp_[static_cast<std::size_t>(ch)] != walk_epoch) continue;
      const int i = lwalk_pos_[static_cast<std::size_t>(ch)];
      const int hi = k - 1 - j;
      if (i <= hi) {
        ++forbidden[static_cast<std::size_t>(i)];
        --forbidden[static_cast<std::size_t>(hi + 1)];
      }
    }
    const int a_lo = std::max(0, k - 1 - static_cast<int>(right.size()));
    const int a_hi = std::min(static_cast<int>(left.size()), k - 1);
    int blocked = 0;
    for (int a = 0; a <= a_hi; ++a) {
      blocked += forbidden[static_cast<std::size_t>(a)];
      if (a < a_lo || blocked > 0) continue;
      const int b = k - 1 - a;
      const int book_left = a > 0 ? chord_of(left[static_cast<std::size_t>(a - 1)]) : q;
      const int book_right = b > 0 ? chord_of(right[static_cast<std::size_t>(b - 1)]) : q;
      bool ok = true;
      for (const int mx : mixed)
        if (mx != book_left && mx != book_right) ok = false;
      if (!ok) continue;
      ConsecutiveWitness w;
      if (a == 0) {
        w.first_ep = qa;
        w.before_first = links_[static_cast<std::size_t>(qa)][0];
      } else {
        w.first_ep = left[static_cast<std::size_t>(a - 1)];
        const int inner = a >= 2 ? left[static_cast<std::size_t>(a - 2)] : qa;
        w.before_first = other_neighbor(w.first_ep, inner);
      }
      if (b == 0) {
        w.last_ep = qa;
        w.after_last = links_[static_cast<std::size_t>(qa)][1];
      } else {
        w.last_ep = right[static_cast<std::size_t>(b - 1)];
        const int inner = b >= 2 ? right[static_cast<std::size_t>(b - 2)] : qa;
        w.after_last = other_neighbor(w.last_ep, inner);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<CscStore::DiagramWithWitness> CscStore::build_degenerate_diagram(
    DegenerateKind kind, std::span<const int> chords, int centre,
    std::span<const int> mp, std::span<const int> mixed) {
  if (chords.size() > 4)
    throw std::invalid_argument("build_degenerate_diagram: more than 4 chords");
  if (chords.size() < 2)
    throw std::invalid_argument("build_degenerate_diagram: fewer than 2 chords");
  if (mixed.size() > 2) return std::nullopt;
  std::vector<int> mp_sorted(mp.begin(), mp.end());
  std::sort(mp_sorted.begin(), mp_sorted.end());
  const auto in_mp = [&](int ch) {
    return std::binary_search(mp_sorted.begin(), mp_sorted.end(), ch);
  };
  for (const int ch : mixed)
    if (!in_mp(ch))
      throw std::invalid_argument("build_degenerate_diagram: mixed outside mp");

  std::vector<int> free_chords(chords.begin(), chords.end());
  if (kind == DegenerateKind::Star) {
    auto it = std::find(free_chords.begin(), free_chords.end(), centre);
    if (it == free_chords.end())
      throw std::invalid_argument("build_degenerate_diagram: centre not among chords");
    free_chords.erase(it);
  }
  std::sort(free_chords.begin(), free_chords.end());

  const auto try_word = [&](const ChordWord& w) -> std::optional<DiagramWithWitness> {
    const int len = static_cast<int>(w.size());
    for (const WordFactor& f : find_factors(w, mp)) {
      if (!mixed.empty()) {
        bool ok = true;
        for (const int mx : mixed)
          if (mx != f.first_chord && mx != f.last_chord) ok = false;
        if (!ok) continue;
      }
      DiagramWithWitness r;
      r.csc = csc_from_word(w);
      const int s = f.start;
      const int e = (f.start + f.length - 1) % len;
      r.witness.first_ep = endpoint_id(w[static_cast<std::size_t>(s)]);
      r.witness.last_ep = endpoint_id(w[static_cast<std::size_t>(e)]);
      r.witness.before_first =
          endpoint_id(w[static_cast<std::size_t>((s + len - 1) % len)]);
      r.witness.after_last =
          endpoint_id(w[static_cast<std::size_t>((e + 1) % len)]);
      return r;
    }
    return std::nullopt;
  };

  // Enumerate the generic diagram of the node kind over all orderings: every
  // chord order gives a complete-crossing word AA for a clique and a
  // centre-crossing word cAcA^r for a star.
  std::vector<int> perm = free_chords;
  do {
    ChordWord w;
    if (kind == DegenerateKind::Clique) {
      for (const int ch : perm) w.push_back(Endpoint{ch, 1});
      for (const int ch : perm) w.push_back(Endpoint{ch, 2});
    } else {
      w.push_back(Endpoint{centre, 1});
      for (const int ch : perm) w.push_back(Endpoint{ch, 1});
      w.push_back(Endpoint{centre, 2});
      for (auto it = perm.rbegin(); it != perm.rend(); ++it)
        w.push_back(Endpoint{*it, 2});
    }
    if (auto r = try_word(w)) return r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

CscStore::DiagramWithWitness CscStore::circle_join(
    const Csc& cu, int q, const ConsecutiveWitness& wu, const Csc& cv, int r,
    const ConsecutiveWitness& wv) {
  struct Side {
    int consumed = -1;   // bookend endpoint of the dying chord, inside factor
    int mate = -1;       // its partner
    int t = -1;          // factor neighbour of `consumed`
    int far_ep = -1;     // surviving bookend endpoint
    int pre_inner = -1;  // factor neighbour of far_ep before surgery (-1: factor was 2 long)
    struct Arc {
      int a_end = -1;  // end adjacent to `consumed`
      int b_end = -1;  // end adjacent to `mate`
      bool empty = true;
    };
    Arc factor_arc, other_arc;
  };

  const auto analyze = [&](const Csc& c, int dying, const ConsecutiveWitness& w,
                           const char* label) {
    (void)c;
    Side s;
    if (w.first_ep == w.last_ep)
      throw std::invalid_argument(std::string("circle_join: ") + label +
                                  " witnessed set has fewer than 2 chords");
    const bool at_first = chord_of(w.first_ep) == dying;
    const bool at_last = chord_of(w.last_ep) == dying;
    if (at_first == at_last)
      throw std::invalid_argument(std::string("circle_join: ") + label +
                                  " chord is not exactly one bookend");
    s.consumed = at_first ? w.first_ep : w.last_ep;
    s.mate = partner(s.consumed);
    const int outside = at_first ? w.before_first : w.after_last;
    s.t = other_neighbor(s.consumed, outside);
    s.far_ep = at_first ? w.last_ep : w.first_ep;
    if (s.t == s.far_ep) {
      s.pre_inner = -1;  // remnant factor is a single endpoint
    } else {
      const int far_outside = at_first ? w.after_last : w.before_first;
      s.pre_inner = other_neighbor(s.far_ep, far_outside);
    }
    const auto& la = links_[static_cast<std::size_t>(s.consumed)];
    if (la[0] == s.mate || la[1] == s.mate) {
      // Endpoints of the dying chord are cycle-adjacent: one side is empty
      // and it is never the factor side, since s.t lies inside the factor.
      s.factor_arc = {s.t, other_neighbor(s.mate, s.consumed), false};
      s.other_arc = {};
    } else {
      const int pa = links_[static_cast<std::size_t>(s.consumed)][0];
      const int pb = links_[static_cast<std::size_t>(s.mate)][0];
      const int ma = links_[static_cast<std::size_t>(s.consumed)][1];
      const int mb = links_[static_cast<std::size_t>(s.mate)][1];
      Side::Arc plus_arc{pa, pb, false};
      Side::Arc minus_arc{ma, mb, false};
      if (plus_arc.a_end == s.t) {
        s.factor_arc = plus_arc;
        s.other_arc = minus_arc;
      } else if (minus_arc.a_end == s.t) {
        s.factor_arc = minus_arc;
        s.other_arc = plus_arc;
      } else {
        throw std::logic_error("circle_join: factor neighbour not on either arc");
      }
    }
    return s;
  };

  if (!chord_alive(q) || !chord_alive(r))
    throw std::invalid_argument("circle_join: dead chord");
  Side u = analyze(cu, q, wu, "first");
  Side v = analyze(cv, r, wv, "second");

  // Anchor bookkeeping before links change: restart the walk at a surviving
  // neighbour of q's endpoint 2q, continuing across the fresh stitch.
  int anchor_ep = links_[static_cast<std::size_t>(ep1(q))][0];
  if (anchor_ep == ep2(q))  // endpoints cycle-adjacent: look the other way
    anchor_ep = links_[static_cast<std::size_t>(ep1(q))][1];
  const int anchor_slot =
      links_[static_cast<std::size_t>(anchor_ep)][0] == ep1(q) ? 0 : 1;

  // Assemble the merged cycle from up to four arcs. The factor arcs swap
  // reading direction relative to each other so the two factor remnants become
  // adjacent across the (u.t, v.t) stitch; the leftover arcs close the cycle.
  struct Piece {
    int entry, entry_dead, exit, exit_dead;
  };
  std::vector<Piece> chain;
  chain.push_back({u.factor_arc.b_end, u.mate, u.factor_arc.a_end, u.consumed});
  chain.push_back({v.factor_arc.a_end, v.consumed, v.factor_arc.b_end, v.mate});
  if (!u.other_arc.empty)
    chain.push_back({u.other_arc.a_end, u.consumed, u.other_arc.b_end, u.mate});
  if (!v.other_arc.empty)
    chain.push_back({v.other_arc.b_end, v.mate, v.other_arc.a_end, v.consumed});

  const int parts = static_cast<int>(chain.size());
  for (int i = 0; i < parts; ++i) {
    const Piece& from = chain[static_cast<std::size_t>(i)];
    const Piece& to = chain[static_cast<std::size_t>((i + 1) % parts)];
    replace_slot(from.exit, from.exit_dead, to.entry);
    replace_slot(to.entry, to.entry_dead, from.exit);
  }

  mark_dead(q);
  mark_dead(r);

  DiagramWithWitness out;
  out.csc = Csc{anchor_ep, links_[static_cast<std::size_t>(anchor_ep)][anchor_slot]};
  out.witness.first_ep = u.far_ep;
  out.witness.last_ep = v.far_ep;
  const int inner_first = u.pre_inner >= 0 ? u.pre_inner : v.t;
  const int inner_last = v.pre_inner >= 0 ? v.pre_inner : u.t;
  out.witness.before_first = other_neighbor(u.far_ep, inner_first);
  out.witness.after_last = other_neighbor(v.far_ep, inner_last);
  return out;
}

Csc CscStore::plain_join(int q, int r) {
  if (!chord_alive(q) || !chord_alive(r))
    throw std::invalid_argument("plain_join: dead chord");
  const auto arc_ends = [&](int ch, bool* plus_empty, bool* minus_empty) {
    const auto& l = links_[static_cast<std::size_t>(ep1(ch))];
    *plus_empty = l[0] == ep2(ch);
    *minus_empty = l[1] == ep2(ch);
    if (*plus_empty && *minus_empty)
      throw std::invalid_argument("plain_join: single-chord diagram");
  };
  bool q_plus_empty, q_minus_empty, r_plus_empty, r_minus_empty;
  arc_ends(q, &q_plus_empty, &q_minus_empty);
  arc_ends(r, &r_plus_empty, &r_minus_empty);

  // Same four-arc assembly as circle_join, reading the plus arcs as the
  // factor sides; here any arc may be empty and is simply dropped.
  struct Piece {
    int entry, entry_dead, exit, exit_dead;
  };
  std::vector<Piece> chain;
  const auto plus = [&](int ep) { return links_[static_cast<std::size_t>(ep)][0]; };
  const auto minus = [&](int ep) { return links_[static_cast<std::size_t>(ep)][1]; };
  if (!q_plus_empty)
    chain.push_back({plus(ep2(q)), ep2(q), plus(ep1(q)), ep1(q)});
  if (!r_plus_empty)
    chain.push_back({plus(ep1(r)), ep1(r), plus(ep2(r)), ep2(r)});
  if (!q_minus_empty)
    chain.push_back({minus(ep1(q)), ep1(q), minus(ep2(q)), ep2(q)});
  if (!r_minus_empty)
    chain.push_back({minus(ep2(r)), ep2(r), minus(ep1(r)), ep1(r)});

  const int parts = static_cast<int>(chain.size());
  for (int i = 0; i < parts; ++i) {
    const Piece& from = chain[static_cast<std::size_t>(i)];
    const Piece& to = chain[static_cast<std::size_t>((i + 1) % parts)];
    replace_slot(from.exit, from.exit_dead, to.entry);
    replace_slot(to.entry, to.entry_dead, from.exit);
  }
  mark_dead(q);
  mark_dead(r);
  return Csc{chain[0].exit, chain[1].entry};
}

Csc CscStore::insert_chord(const Csc& c, const ConsecutiveWitness& w,
                           int new_chord) {
  ensure_chord(new_chord);
  if (alive_[static_cast<std::size_t>(new_chord)])
    throw std::invalid_argument("insert_chord: chord id already in use");
  const int z1 = ep1(new_chord);
  const int z2 = ep2(new_chord);

  const auto& l0 = links_[static_cast<std::size_t>(c.anchor_ep)];
  if (l0[0] == l0[1]) {
    // One-chord diagram: the result is the unique two-crossing diagram.
    const int y1 = c.anchor_ep;
    const int y2 = l0[0];
    set_links(y1, z1, z2);
    set_links(y2, z1, z2);
    set_links(z1, y1, y2);
    set_links(z2, y1, y2);
    alive_[static_cast<std::size_t>(new_chord)] = 1;
    return Csc{y1, links_[static_cast<std::size_t>(y1)][0]};
  }

  replace_slot(w.before_first, w.first_ep, z1);
  replace_slot(w.first_ep, w.before_first, z1);
  set_links(z1, w.first_ep, w.before_first);  // plus points into the factor
  replace_slot(w.last_ep, w.after_last, z2);
  replace_slot(w.after_last, w.last_ep, z2);
  set_links(z2, w.last_ep, w.after_last);
  alive_[static_cast<std::size_t>(new_chord)] = 1;

  Csc out = c;
  const auto& la = links_[static_cast<std::size_t>(out.anchor_ep)];
  if (la[0] != out.anchor_next && la[1] != out.anchor_next)
    out.anchor_next = la[0];
  return out;
}

}  // namespace cg
