#pragma once
// The m-blind-frog process: only the set of pads held by the m nastiest frogs
// is tracked. Poking letter a advances, by exactly one pad, every frog in the
// poked set H: the pads reachable by walking backwards through occupied pads
// to some pad labeled a. The hop count is |H| and the update is independent
// of the order in which agitated frogs are resolved.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "frogs/ring.hpp"

namespace frogs {

using PadSet = std::uint64_t;  // bit p set ⟺ pad p occupied; ring size ≤ 64

inline PadSet pads_to_set(const std::vector<int>& pads) {
  PadSet s = 0;
  for (int p : pads) s |= 1ull << p;
  return s;
}

inline std::vector<int> set_to_pads(PadSet s, int ell) {
  std::vector<int> out;
  for (int p = 0; p < ell; ++p)
    if (s >> p & 1) out.push_back(p);
  return out;
}

struct BlindPokeResult {
  PadSet pads;
  int hop;
};

// Poked set: pad x is in H iff pads y, y+1, …, x are all occupied for some
// pad y labeled a (indices cyclic). Computed in one backward-anchored scan.
inline PadSet poked_set(const Ring& ring, PadSet s, int a) {
  const int ell = ring.size();
  int anchor = -1;
  for (int p = 0; p < ell; ++p)
    if (!(s >> p & 1)) {
      anchor = p;
      break;
    }
  if (anchor < 0) {  // full ring: every frog is poked when the letter occurs
    for (int p = 0; p < ell; ++p)
      if (ring.labels[p] == a) return s;
    return 0;
  }
  PadSet h = 0;
  bool carry = false;  // an a-labeled pad starts a run; empty pads break it
  for (int step = 1; step <= ell; ++step) {
    int p = (anchor + step) % ell;
    if (!(s >> p & 1)) {
      carry = false;
      continue;
    }
    carry = carry || ring.labels[p] == a;
    if (carry) h |= 1ull << p;
  }
  return h;
}

inline BlindPokeResult blind_poke(const Ring& ring, PadSet s, int a) {
  if (a < 1) throw std::invalid_argument("blind_poke: letter out of range");
  const int ell = ring.size();
  PadSet h = poked_set(ring, s, a);
  PadSet shifted = 0;
  for (int p = 0; p < ell; ++p)
    if (h >> p & 1) shifted |= 1ull << ((p + 1) % ell);
  return {(s & ~h) | shifted, __builtin_popcountll(h)};
}

// Reference simulation resolving one agitated frog at a time. The permutation
// `order` assigns each pad a priority; among the currently agitated frogs the
// one on the highest-priority pad hops next. Every order yields blind_poke's
// answer, which is what the order-independence tests pin down.
inline BlindPokeResult blind_poke_naive(const Ring& ring, PadSet s, int a,
                                        const std::vector<int>& order) {
  if (a < 1) throw std::invalid_argument("blind_poke_naive: letter out of range");
  const int ell = ring.size();
  if (static_cast<int>(order.size()) != ell)
    throw std::invalid_argument("blind_poke_naive: order size mismatch");
  std::vector<int> floating;  // pads agitated frogs are leaving (multiset)
  for (int p = 0; p < ell; ++p)
    if ((s >> p & 1) && ring.labels[p] == a) {
      floating.push_back(p);
      s &= ~(1ull << p);
    }
  int hops = 0;
  while (!floating.empty()) {
    size_t pick = 0;
    for (size_t i = 1; i < floating.size(); ++i)
      if (order[floating[i]] > order[floating[pick]]) pick = i;
    int p = floating[pick];
    floating.erase(floating.begin() + pick);
    int q = (p + 1) % ell;
    ++hops;
    if (s >> q & 1)
      floating.push_back(q);  // displaced occupant hops later
    else
      s |= 1ull << q;
  }
  return {s, hops};
}

}  // namespace frogs
