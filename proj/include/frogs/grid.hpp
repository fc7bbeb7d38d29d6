#pragma once
// Geometry of the 2×k grid. The clockwise order runs along the top row left
// to right, then along the bottom row right to left, and wraps:
//   (1,1) (1,2) … (1,k) (2,k) (2,k−1) … (2,1) (1,1) …
// Squares are stored in 2k-bit occupancy masks, bit (r−1)·k + (c−1).

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace frogs {

using Mask = std::uint32_t;  // supports k ≤ 16

struct Square {
  int r;  // row, 1 or 2
  int c;  // column, 1..k
  auto operator<=>(const Square&) const = default;
};

inline void check_square(Square s, int k) {
  if (s.r < 1 || s.r > 2 || s.c < 1 || s.c > k)
    throw std::invalid_argument("square out of bounds");
}

inline int square_bit(Square s, int k) { return (s.r - 1) * k + (s.c - 1); }
inline Mask square_mask(Square s, int k) { return Mask{1} << square_bit(s, k); }
inline Square square_from_bit(int b, int k) { return {b / k + 1, b % k + 1}; }
inline bool has(Mask m, Square s, int k) { return m >> square_bit(s, k) & 1; }

inline Mask full_mask(int k) { return (Mask{1} << (2 * k)) - 1; }
inline Mask column_mask(int c, int k) {
  return square_mask({1, c}, k) | square_mask({2, c}, k);
}

inline Square succ(Square s, int k) {
  if (s.r == 1) return s.c < k ? Square{1, s.c + 1} : Square{2, k};
  return s.c > 1 ? Square{2, s.c - 1} : Square{1, 1};
}

inline Square pred(Square s, int k) {
  if (s.r == 1) return s.c > 1 ? Square{1, s.c - 1} : Square{2, 1};
  return s.c < k ? Square{2, s.c + 1} : Square{1, k};
}

inline Square opp(Square s) { return {3 - s.r, s.c}; }

// 180° rotation of the grid; an involution that reverses nothing else.
inline Square rot(Square s, int k) { return {3 - s.r, k + 1 - s.c}; }

inline Mask rot_mask(Mask m, int k) {
  Mask out = 0;
  for (int b = 0; b < 2 * k; ++b)
    if (m >> b & 1) out |= square_mask(rot(square_from_bit(b, k), k), k);
  return out;
}

// I[a,b] walks successors from a to b inclusive. The half-open form I(a,b]
// starts at a's successor, so I(a,a] is the entire 2k-cycle; paths are never
// empty and never longer than 2k.
inline std::vector<Square> clockwise_path(Square a, Square b, int k, bool half_open) {
  check_square(a, k);
  check_square(b, k);
  std::vector<Square> path;
  Square cur = half_open ? succ(a, k) : a;
  for (int i = 0; i < 2 * k; ++i) {
    path.push_back(cur);
    if (cur == b) break;
    cur = succ(cur, k);
  }
  return path;
}

// First square strictly before sq (walking predecessors) that is missing from
// F; sq itself when sq ∉ F or when F covers the whole grid.
inline Square eb(Mask F, Square sq, int k) {
  check_square(sq, k);
  if (!has(F, sq, k) || F == full_mask(k)) return sq;
  Square cur = pred(sq, k);
  while (has(F, cur, k)) cur = pred(cur, k);
  return cur;
}

// Ring identification: pad i on the 2k-ring of the zigzag word corresponds to
// grid square (1, i+1) for i < k and (2, 2k−i) for i ≥ k, so pads labeled c
// are exactly the squares of column c.
inline Square pad_to_square(int pad, int k) {
  if (pad < 0 || pad >= 2 * k) throw std::invalid_argument("pad out of range");
  return pad < k ? Square{1, pad + 1} : Square{2, 2 * k - pad};
}

inline int square_to_pad(Square s, int k) {
  check_square(s, k);
  return s.r == 1 ? s.c - 1 : 2 * k - s.c;
}

inline std::uint64_t grid_to_ring_mask(Mask F, int k) {
  std::uint64_t s = 0;
  for (int b = 0; b < 2 * k; ++b)
    if (F >> b & 1) s |= 1ull << square_to_pad(square_from_bit(b, k), k);
  return s;
}

inline Mask ring_to_grid_mask(std::uint64_t s, int k) {
  Mask F = 0;
  for (int p = 0; p < 2 * k; ++p)
    if (s >> p & 1) F |= square_mask(pad_to_square(p, k), k);
  return F;
}

}  // namespace frogs
