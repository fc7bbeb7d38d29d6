#pragma once
// The full frog process on a ring of labeled lily pads. Frogs are ranked by
// nastiness (frog 1 is nastiest); poking a letter agitates every frog whose
// pad carries that letter, and agitated frogs leap clockwise, in descending
// nastiness, to the first pad that is empty or holds a less nasty frog.
// Displacement counts every pad traveled, including pads passed over.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "frogs/words.hpp"

namespace frogs {

struct Ring {
  Word labels;  // labels[i] is the letter on pad i (pads are 0-based)
  int size() const { return static_cast<int>(labels.size()); }
};

// pad_of[i] is the pad of frog i+1; a bijection onto 0..ℓ−1.
struct FrogArrangement {
  std::vector<int> pad_of;
  bool operator==(const FrogArrangement&) const = default;
};

inline FrogArrangement identity_arrangement(int ell) {
  FrogArrangement f;
  f.pad_of.resize(ell);
  for (int i = 0; i < ell; ++i) f.pad_of[i] = i;
  return f;
}

struct RingPokeResult {
  FrogArrangement frogs;
  std::vector<long long> disp;  // pads traveled, per frog
};

inline RingPokeResult ring_poke(const Ring& ring, const FrogArrangement& f, int a) {
  if (a < 1) throw std::invalid_argument("ring_poke: letter out of range");
  const int ell = ring.size();
  if (static_cast<int>(f.pad_of.size()) != ell)
    throw std::invalid_argument("ring_poke: arrangement size mismatch");

  std::vector<int> occupant(ell, 0);  // 0 = empty, otherwise frog index (1-based)
  for (int i = 0; i < ell; ++i) occupant[f.pad_of[i]] = i + 1;

  std::vector<int> loc(ell + 1);  // current pad per frog; leap origin while agitated
  for (int i = 0; i < ell; ++i) loc[i + 1] = f.pad_of[i];

  std::set<int> agitated;
  for (int p = 0; p < ell; ++p)
    if (ring.labels[p] == a && occupant[p] != 0) agitated.insert(occupant[p]);

  std::vector<long long> disp(ell, 0);
  while (!agitated.empty()) {
    int g = *agitated.begin();  // nastiest agitated frog leaps first
    agitated.erase(agitated.begin());
    int p = loc[g];
    if (occupant[p] == g) occupant[p] = 0;
    int q = p, steps = 0;
    do {  // pads holding nastier frogs are passed over
      q = (q + 1) % ell;
      ++steps;
    } while (occupant[q] != 0 && occupant[q] < g);
    disp[g - 1] += steps;
    if (occupant[q] != 0) {
      int bumped = occupant[q];
      loc[bumped] = q;
      agitated.insert(bumped);  // bumped frog is less nasty than g
    }
    occupant[q] = g;
    loc[g] = q;
  }

  RingPokeResult out;
  out.frogs.pad_of.resize(ell);
  for (int i = 0; i < ell; ++i) out.frogs.pad_of[i] = loc[i + 1];
  out.disp = std::move(disp);
  return out;
}

// Left-to-right composition; displacements accumulate additively.
inline RingPokeResult ring_poke_word(const Ring& ring, const FrogArrangement& f, const Word& r) {
  RingPokeResult out{f, std::vector<long long>(ring.size(), 0)};
  for (int a : r) {
    RingPokeResult step = ring_poke(ring, out.frogs, a);
    out.frogs = std::move(step.frogs);
    for (size_t i = 0; i < out.disp.size(); ++i) out.disp[i] += step.disp[i];
  }
  return out;
}

// Pads occupied by the m nastiest frogs, sorted ascending.
inline std::vector<int> project_nastiest(const FrogArrangement& f, int m) {
  if (m < 0 || m > static_cast<int>(f.pad_of.size()))
    throw std::invalid_argument("project_nastiest: m out of range");
  std::vector<int> pads(f.pad_of.begin(), f.pad_of.begin() + m);
  std::sort(pads.begin(), pads.end());
  return pads;
}

}  // namespace frogs
