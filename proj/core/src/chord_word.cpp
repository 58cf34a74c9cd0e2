#include "circlegraph/chord_word.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cg {

std::vector<int> word_chords(const ChordWord& w) {
  std::vector<int> ids;
  ids.reserve(w.size() / 2);
  for (const Endpoint& e : w) ids.push_back(e.chord);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void check_double_occurrence(const ChordWord& w) {
  std::map<int, int> seen;  // chord -> bitmask of indices seen
  for (const Endpoint& e : w) {
    if (e.index != 1 && e.index != 2)
      throw std::invalid_argument("endpoint index must be 1 or 2");
    int& mask = seen[e.chord];
    int bit = 1 << (e.index - 1);
    if (mask & bit)
      throw std::invalid_argument("chord " + std::to_string(e.chord) +
                                  " repeats endpoint " + std::to_string(e.index));
    mask |= bit;
  }
  for (auto [chord, mask] : seen)
    if (mask != 3)
      throw std::invalid_argument("chord " + std::to_string(chord) +
                                  " is missing an endpoint");
}

Interlacement interlacement(const ChordWord& w) {
  check_double_occurrence(w);
  Interlacement r;
  r.chord_ids = word_chords(w);
  const int k = static_cast<int>(r.chord_ids.size());
  r.graph = Graph(k);
  std::map<int, int> dense;
  for (int i = 0; i < k; ++i) dense[r.chord_ids[static_cast<std::size_t>(i)]] = i;

  const int len = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(k), {-1, -1});
  for (int i = 0; i < len; ++i) {
    int c = dense[w[static_cast<std::size_t>(i)].chord];
    (pos[static_cast<std::size_t>(c)].first < 0
         ? pos[static_cast<std::size_t>(c)].first
         : pos[static_cast<std::size_t>(c)].second) = i;
  }
  for (int x = 0; x < k; ++x) {
    auto [x1, x2] = pos[static_cast<std::size_t>(x)];
    for (int y = x + 1; y < k; ++y) {
      auto [y1, y2] = pos[static_cast<std::size_t>(y)];
      bool in1 = x1 < y1 && y1 < x2;
      bool in2 = x1 < y2 && y2 < x2;
      if (in1 != in2) r.graph.add_edge(x, y);
    }
  }
  return r;
}

Graph interlacement_graph(const ChordWord& w) {
  Interlacement r = interlacement(w);
  for (std::size_t i = 0; i < r.chord_ids.size(); ++i)
    if (r.chord_ids[i] != static_cast<int>(i))
      throw std::invalid_argument("chord ids are not dense 0..k-1");
  return std::move(r.graph);
}

ChordWord induced_word(const ChordWord& w, std::span<const int> keep) {
  std::vector<int> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  ChordWord out;
  for (const Endpoint& e : w)
    if (std::binary_search(k.begin(), k.end(), e.chord)) out.push_back(e);
  return out;
}

namespace {

// Endpoint positions of chord q in w; (first occurrence of index 1, of 2).
std::pair<int, int> chord_positions(const ChordWord& w, int q) {
  int p1 = -1, p2 = -1;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    const Endpoint& e = w[static_cast<std::size_t>(i)];
    if (e.chord != q) continue;
    (e.index == 1 ? p1 : p2) = i;
  }
  if (p1 < 0 || p2 < 0) throw std::invalid_argument("chord not present in word");
  return {p1, p2};
}

// Arc strictly between positions i and j reading forward.
ChordWord arc(const ChordWord& w, int i, int j) {
  ChordWord out;
  const int len = static_cast<int>(w.size());
  for (int k = (i + 1) % len; k != j; k = (k + 1) % len)
    out.push_back(w[static_cast<std::size_t>(k)]);
  return out;
}

void append(ChordWord& out, const ChordWord& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

ChordWord reflected(const ChordWord& w) { return ChordWord(w.rbegin(), w.rend()); }

ChordWord circle_join_word(const ChordWord& c, int q, const ChordWord& cp,
                           int qp, JoinVariant variant) {
  check_double_occurrence(c);
  check_double_occurrence(cp);
  if (word_chords(c).size() < 2 || word_chords(cp).size() < 2)
    throw std::invalid_argument("circle-join needs at least two chords per side");
  {
    std::vector<int> a = word_chords(c), b = word_chords(cp), inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(inter));
    if (!inter.empty())
      throw std::invalid_argument("operand chord ids overlap");
  }
  const ChordWord second = (variant == JoinVariant::DirectReflected ||
                            variant == JoinVariant::SwappedReflected)
                               ? reflected(cp)
                               : cp;
  auto [q1, q2] = chord_positions(c, q);
  auto [r1, r2] = chord_positions(second, qp);
  ChordWord a12 = arc(c, q1, q2), a21 = arc(c, q2, q1);
  ChordWord b12 = arc(second, r1, r2), b21 = arc(second, r2, r1);
  ChordWord out;
  out.reserve(c.size() + cp.size() - 4);
  const bool swapped = variant == JoinVariant::Swapped ||
                       variant == JoinVariant::SwappedReflected;
  if (!swapped) {
    append(out, a12);
    append(out, b12);
    append(out, a21);
    append(out, b21);
  } else {
    append(out, b12);
    append(out, a12);
    append(out, b21);
    append(out, a21);
  }
  return out;
}

std::vector<int> simple_word(const ChordWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const Endpoint& e : w) out.push_back(e.chord);
  return out;
}

bool rotation_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<int> d(b);
  d.insert(d.end(), b.begin(), b.end());
  for (std::size_t s = 0; s < b.size(); ++s)
    if (std::equal(a.begin(), a.end(), d.begin() + static_cast<long>(s)))
      return true;
  return false;
}

bool rotation_reflection_equal(const std::vector<int>& a,
                               const std::vector<int>& b) {
  if (rotation_equal(a, b)) return true;
  std::vector<int> ar(a.rbegin(), a.rend());
  return rotation_equal(ar, b);
}

bool same_diagram(const ChordWord& a, const ChordWord& b) {
  return rotation_reflection_equal(simple_word(a), simple_word(b));
}

std::vector<WordFactor> find_factors(const ChordWord& w, std::span<const int> s) {
  std::vector<WordFactor> out;
  std::vector<int> set(s.begin(), s.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const int k = static_cast<int>(set.size());
  const int len = static_cast<int>(w.size());
  if (k == 0 || k > len) return out;
  auto in_set = [&](int chord) {
    return std::binary_search(set.begin(), set.end(), chord);
  };
  for (int start = 0; start < len; ++start) {
    std::vector<int> hit;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      int chord = w[static_cast<std::size_t>((start + i) % len)].chord;
      if (!in_set(chord) ||
          std::find(hit.begin(), hit.end(), chord) != hit.end())
        ok = false;
      else
        hit.push_back(chord);
    }
    if (ok)
      out.push_back({start, k, w[static_cast<std::size_t>(start)].chord,
                     w[static_cast<std::size_t>((start + k - 1) % len)].chord});
  }
  return out;
}

}  // namespace cg
