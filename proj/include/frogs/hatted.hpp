#pragma once
// Hatted-frog arrangements (F, H) on the 2×k grid and their process.
// Invariants: H ⊆ F, every occupied column has exactly one hat among its two
// squares, and a bottom hat at (2,c) forbids a top hat at (1,c+1).
// Poking a column agitates its frogs; each agitated frog hops one square
// clockwise, takes its new column's hat (stealing from the square opposite if
// needed), and any displaced occupant hops immediately after. When both frogs
// of a column are poked, the one not originally wearing the hat hops first.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frogs/grid.hpp"
#include "frogs/rational.hpp"

namespace frogs {

struct HattedArrangement {
  int k;
  Mask F = 0;
  Mask H = 0;
  auto operator<=>(const HattedArrangement&) const = default;
};

inline bool hatted_valid(const HattedArrangement& a) {
  const int k = a.k;
  if (a.H & ~a.F) return false;
  for (int c = 1; c <= k; ++c) {
    bool occupied = a.F & column_mask(c, k);
    int hats = (has(a.H, {1, c}, k) ? 1 : 0) + (has(a.H, {2, c}, k) ? 1 : 0);
    if (hats != (occupied ? 1 : 0)) return false;
    if (c < k && has(a.H, {2, c}, k) && has(a.H, {1, c + 1}, k)) return false;
  }
  return true;
}

inline HattedArrangement rot_arrangement(const HattedArrangement& a) {
  return {a.k, rot_mask(a.F, a.k), rot_mask(a.H, a.k)};
}

// All valid hat placements over a fixed occupancy F, in ascending mask order.
inline std::vector<Mask> hat_placements(Mask F, int k) {
  std::vector<Mask> acc{0};
  for (int c = 1; c <= k; ++c) {
    std::vector<Mask> next;
    bool top = F >> square_bit({1, c}, k) & 1;
    bool bot = F >> square_bit({2, c}, k) & 1;
    for (Mask h : acc) {
      bool prev_bottom = c > 1 && (h >> square_bit({2, c - 1}, k) & 1);
      if (!top && !bot) {
        next.push_back(h);
        continue;
      }
      if (top && !prev_bottom) next.push_back(h | square_mask({1, c}, k));
      if (bot) next.push_back(h | square_mask({2, c}, k));
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

inline long long fiber_count(Mask F, int k) {
  // Same per-column search, but only the count is tracked: DP over whether
  // the previous column took a bottom hat.
  long long no_bottom = 1, bottom = 0;
  for (int c = 1; c <= k; ++c) {
    bool top = F >> square_bit({1, c}, k) & 1;
    bool bot = F >> square_bit({2, c}, k) & 1;
    long long nb = 0, bb = 0;
    if (!top && !bot) {
      nb = no_bottom + bottom;
    } else {
      if (top) nb += no_bottom;            // top hat needs no bottom hat before
      if (bot) bb += no_bottom + bottom;   // bottom hat is always permitted
    }
    no_bottom = nb;
    bottom = bb;
  }
  return no_bottom + bottom;
}

inline std::vector<HattedArrangement> enumerate_hatted(int k, int m) {
  if (k < 1 || k > 12) throw std::invalid_argument("enumerate_hatted: bad k");
  if (m < 0 || m > 2 * k) throw std::invalid_argument("enumerate_hatted: m out of range");
  std::vector<HattedArrangement> out;
  for (Mask F = 0; F <= full_mask(k); ++F) {
    if (__builtin_popcount(F) != m) continue;
    for (Mask H : hat_placements(F, k)) out.push_back({k, F, H});
  }
  return out;  // ascending (F, H): the canonical enumeration order
}

// Counting triangle: f(n, m) = Σ_i C(n−2i, m−2i). Row n = 2k counts the
// m-frog hatted arrangements on 2×k.
inline BigInt count_f(long long n, long long m) {
  if (n < 0 || m < 0 || m > n) throw std::domain_error("count_f: out of range");
  BigInt total = 0;
  for (long long i = 0; 2 * i <= m; ++i) total += binomial(n - 2 * i, m - 2 * i);
  return total;
}

// The same triangle by its recurrence; cross-checked against count_f.
inline BigInt count_f_recurrence(long long n, long long m) {
  if (n < 0 || m < 0 || m > n) throw std::domain_error("count_f_recurrence: out of range");
  static thread_local std::map<std::pair<long long, long long>, BigInt> memo;
  auto rec = [](auto&& self, long long nn, long long mm) -> BigInt {
    if (mm == 0) return 1;
    if (mm == nn) return nn / 2 + 1;
    auto it = memo.find({nn, mm});
    if (it != memo.end()) return it->second;
    BigInt v = self(self, nn - 1, mm) + self(self, nn - 1, mm - 1);
    memo.emplace(std::pair{nn, mm}, v);
    return v;
  };
  return rec(rec, n, m);
}

inline BigInt count_hatted(int k, int m) { return count_f(2LL * k, m); }

struct HattedPokeResult {
  HattedArrangement arr;
  int hop;
};

inline HattedPokeResult hatted_poke(const HattedArrangement& a, int letter) {
  if (letter < 1) throw std::invalid_argument("hatted_poke: letter out of range");
  const int k = a.k;
  if (letter > k || !(a.F & column_mask(letter, k))) return {a, 0};

  Mask F = a.F, H = a.H;
  std::vector<Square> agitated;  // unhatted first, then the hatted frog
  for (int r = 2; r >= 1; --r) {
    Square s{r, letter};
    if (has(a.F, s, k) && !has(a.H, s, k)) agitated.push_back(s);
  }
  for (int r = 1; r <= 2; ++r) {
    Square s{r, letter};
    if (has(a.H, s, k)) agitated.push_back(s);
  }
  for (Square s : agitated) {
    F &= ~square_mask(s, k);
    H &= ~square_mask(s, k);
  }

  int hop = 0;
  for (Square start : agitated) {
    Square g = start;
    while (true) {
      Square t = succ(g, k);
      ++hop;
      bool displaced = has(F, t, k);
      H = (H & ~square_mask(opp(t), k)) | square_mask(t, k);  // hat follows the lander
      if (!displaced) {
        F |= square_mask(t, k);
        break;  // chain ends on an empty square
      }
      g = t;  // previous occupant hops next
    }
  }
  return {{k, F, H}, hop};
}

inline Mask doff(const HattedArrangement& a) { return a.F; }

// Squares that hop when poking column c: those reachable from either square
// of column c by a clockwise walk that stays inside F.
inline Mask hop_set(const HattedArrangement& a, int c) {
  const int k = a.k;
  if (c < 1 || c > k) throw std::invalid_argument("hop_set: column out of range");
  Mask out = 0;
  for (int r = 1; r <= 2; ++r) {
    Square g{r, c};
    for (int i = 0; i < 2 * k && has(a.F, g, k); ++i) {
      out |= square_mask(g, k);
      g = succ(g, k);
    }
  }
  return out;
}

// A path aligns when every square is occupied and a square is hatted exactly
// when its column is not visited again later in the path.
inline bool aligns(const HattedArrangement& a, const std::vector<Square>& path) {
  const int k = a.k;
  for (size_t i = 0; i < path.size(); ++i) {
    if (!has(a.F, path[i], k)) return false;
    bool recurs = false;
    for (size_t j = i + 1; j < path.size() && !recurs; ++j)
      recurs = path[j].c == path[i].c;
    if (has(a.H, path[i], k) == recurs) return false;
  }
  return true;
}

}  // namespace frogs
