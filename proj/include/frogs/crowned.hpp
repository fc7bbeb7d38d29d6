#pragma once
// Crowned-frog arrangements: a hatted arrangement (F, H) augmented with the
// agitated squares A (at most two), a distinguished crowned frog, and an
// agitated/settled flag. This is the bookkeeping that makes every hop of the
// hatted process invertible: `move` performs one hop, is a bijection from
// non-ending onto non-starting arrangements, and `move_inverse` reconstructs
// the previous step without any search.

#include <stdexcept>
#include <string>
#include <vector>

#include "frogs/hatted.hpp"

namespace frogs {

struct CrownedArrangement {
  int k = 0;
  Mask F = 0;
  Mask H = 0;
  Mask A = 0;        // agitated squares; may intersect F
  Square crown{1, 1};
  bool agitated = true;  // the flag x; false means settled
  auto operator<=>(const CrownedArrangement&) const = default;
};

// Validity clauses, reported individually so failures are debuggable.
enum class Clause { ok, a, b, c, d, e, f1, f2, g };

inline const char* clause_name(Clause c) {
  switch (c) {
    case Clause::ok: return "ok";
    case Clause::a: return "a";
    case Clause::b: return "b";
    case Clause::c: return "c";
    case Clause::d: return "d";
    case Clause::e: return "e";
    case Clause::f1: return "f1";
    case Clause::f2: return "f2";
    case Clause::g: return "g";
  }
  return "?";
}

namespace detail {
inline bool column_full(Mask F, int c, int k) {
  return (F & column_mask(c, k)) == column_mask(c, k);
}
inline std::vector<Square> mask_squares(Mask m, int k) {
  std::vector<Square> out;
  for (int b = 0; b < 2 * k; ++b)
    if (m >> b & 1) out.push_back(square_from_bit(b, k));
  return out;
}
}  // namespace detail

// Checks the seven structural clauses; returns the first failing one.
inline Clause validate_crowned(const CrownedArrangement& cr, int m) {
  const int k = cr.k;
  check_square(cr.crown, k);
  if (!hatted_valid({k, cr.F, cr.H})) return Clause::a;
  int acount = __builtin_popcount(cr.A);
  if (acount > 2 || __builtin_popcount(cr.F) + acount != m) return Clause::b;
  bool crown_in_A = has(cr.A, cr.crown, k);
  bool crown_in_H = has(cr.H, cr.crown, k);
  if (!crown_in_A && !crown_in_H) return Clause::c;
  if (cr.agitated && !crown_in_A) return Clause::c;
  if (!cr.agitated && !crown_in_H) return Clause::c;
  HattedArrangement fh{k, cr.F, cr.H};
  for (Square g : detail::mask_squares(cr.A, k)) {
    if (!(cr.F & column_mask(g.c, k))) continue;
    if (!aligns(fh, clockwise_path(eb(cr.F, g, k), g, k, /*half_open=*/true)))
      return Clause::d;
  }
  if (acount == 1 && !cr.agitated) {
    Square g = detail::mask_squares(cr.A, k)[0];
    if (has(cr.H, succ(g, k), k)) return Clause::e;
    for (Square sq : clockwise_path(cr.crown, g, k, /*half_open=*/false))
      if (!detail::column_full(cr.F, sq.c, k)) return Clause::e;
  }
  if (acount == 2) {
    if (cr.F & column_mask(cr.crown.c, k)) return Clause::f1;
    if (!crown_in_A) return Clause::f1;
    Square g{-1, -1};
    for (Square s : detail::mask_squares(cr.A, k))
      if (s != cr.crown) g = s;
    if (has(cr.H, succ(g, k), k)) return Clause::f2;
    auto path = clockwise_path(opp(cr.crown), g, k, /*half_open=*/false);
    for (size_t i = 1; i < path.size(); ++i)  // the path minus its first square
      if (!detail::column_full(cr.F, path[i].c, k)) return Clause::f2;
  }
  if (cr.agitated && eb(cr.F, cr.crown, k) == opp(succ(cr.crown, k))) {
    if (cr.F & column_mask(succ(cr.crown, k).c, k)) return Clause::g;
  }
  return Clause::ok;
}

inline bool crowned_valid(const CrownedArrangement& cr, int m) {
  return validate_crowned(cr, m) == Clause::ok;
}

inline int crowned_m(const CrownedArrangement& cr) {
  return __builtin_popcount(cr.F) + __builtin_popcount(cr.A);
}

inline CrownedArrangement rot_crowned(const CrownedArrangement& cr) {
  return {cr.k,
          rot_mask(cr.F, cr.k),
          rot_mask(cr.H, cr.k),
          rot_mask(cr.A, cr.k),
          rot(cr.crown, cr.k),
          cr.agitated};
}

inline bool is_ending(const CrownedArrangement& cr) {
  return cr.A == 0 && !cr.agitated;
}

// Starting arrangements are exactly the images of poking a nonempty column.
inline bool is_starting(const CrownedArrangement& cr) {
  const int k = cr.k;
  if (!cr.agitated) return false;
  if (cr.A & ~column_mask(cr.crown.c, k)) return false;
  if (cr.F & column_mask(cr.crown.c, k)) return false;
  return hatted_valid({k, cr.F | cr.A, cr.H | square_mask(cr.crown, k)});
}

struct CrownedPokeResult {
  bool poked;  // false: the column was empty and the arrangement is unchanged
  CrownedArrangement crowned;
  HattedArrangement untouched;
};

inline CrownedPokeResult poke_crowned(const HattedArrangement& a, int c) {
  const int k = a.k;
  if (c < 1 || c > k) throw std::invalid_argument("poke_crowned: column out of range");
  Mask A = a.F & column_mask(c, k);
  if (!A) return {false, {}, a};
  Mask crown_bit = a.H & A;  // the hatted frog of the column dons the crown
  CrownedArrangement cr{k, a.F & ~A, a.H & ~A, A,
                        square_from_bit(__builtin_ctz(crown_bit), k), true};
  return {true, cr, a};
}

inline HattedArrangement dethrone(const CrownedArrangement& cr) {
  if (!is_ending(cr)) throw std::domain_error("dethrone: not an ending arrangement");
  return {cr.k, cr.F, cr.H};
}

// The eight transition rules; names encode who hops (crown or plain frog) and
// what it lands on (Empty column, Empty square with Hat steal, Hatted frog,
// unhatted Frog, or the Crown's own square from below).
enum class MoveRule { cE, cEH, cH, cFH, fE, fEH, fFH, fFC };

inline const char* rule_name(MoveRule r) {
  switch (r) {
    case MoveRule::cE: return "cE";
    case MoveRule::cEH: return "cEH";
    case MoveRule::cH: return "cH";
    case MoveRule::cFH: return "cFH";
    case MoveRule::fE: return "fE";
    case MoveRule::fEH: return "fEH";
    case MoveRule::fFH: return "fFH";
    case MoveRule::fFC: return "fFC";
  }
  return "?";
}

struct MoveStep {
  CrownedArrangement next;
  MoveRule rule;
};

inline MoveStep move_step(const CrownedArrangement& cr) {
  const int k = cr.k;
  const int m = crowned_m(cr);
  if (Clause cl = validate_crowned(cr, m); cl != Clause::ok)
    throw std::domain_error(std::string("move: invalid arrangement, clause ") + clause_name(cl));
  if (is_ending(cr)) throw std::domain_error("move: ending arrangement");

  const Mask crown_bit = square_mask(cr.crown, k);
  if (cr.A == crown_bit && cr.agitated) {
    // The crown itself hops.
    Square t = succ(cr.crown, k);
    Mask tb = square_mask(t, k), ob = square_mask(opp(t), k);
    if (!(cr.F & column_mask(t.c, k)))
      return {{k, cr.F | tb, cr.H | tb, 0, t, false}, MoveRule::cE};
    if (!has(cr.F, t, k))
      return {{k, cr.F | tb, (cr.H & ~ob) | tb, 0, t, false}, MoveRule::cEH};
    if (has(cr.H, t, k)) return {{k, cr.F, cr.H, tb, t, true}, MoveRule::cH};
    return {{k, cr.F, (cr.H & ~ob) | tb, tb, t, false}, MoveRule::cFH};
  }

  // |A| = 2, or |A| = 1 with the crown settled: a plain frog hops.
  Square g{-1, -1};
  for (Square s : detail::mask_squares(cr.A, k))
    if (__builtin_popcount(cr.A) == 1 || s != cr.crown) g = s;
  Square t = succ(g, k);
  if (has(cr.H, t, k)) throw std::logic_error("move: landing square is hatted");
  Mask gb = square_mask(g, k), tb = square_mask(t, k), ob = square_mask(opp(t), k);
  if (!(cr.F & column_mask(t.c, k)))
    return {{k, cr.F | tb, cr.H | tb, cr.A & ~gb, cr.crown, cr.agitated}, MoveRule::fE};
  if (!has(cr.F, t, k))
    return {{k, cr.F | tb, (cr.H & ~ob) | tb, cr.A & ~gb, cr.crown, cr.agitated}, MoveRule::fEH};
  if (cr.crown != opp(t))
    return {{k, cr.F, (cr.H & ~ob) | tb, (cr.A & ~gb) | tb, cr.crown, cr.agitated}, MoveRule::fFH};
  return {{k, cr.F, (cr.H & ~ob) | tb, tb, t, true}, MoveRule::fFC};
}

inline CrownedArrangement move(const CrownedArrangement& cr) { return move_step(cr).next; }

namespace detail {

// Constructive inverse for a crown in the top row; the public wrapper
// conjugates by rot when the crown sits in the bottom row.
inline CrownedArrangement move_inverse_top(const CrownedArrangement& cr) {
  const int k = cr.k;
  const int c = cr.crown.c;
  const Mask crown_bit = square_mask(cr.crown, k);
  const int acount = __builtin_popcount(cr.A);

  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("move_inverse: ") + what);
  };

  if (acount == 2) {
    // A plain frog just hopped onto an occupied unhatted square (fFH).
    Square g{-1, -1};
    for (Square s : mask_squares(cr.A, k))
      if (s != cr.crown) g = s;
    require(has(cr.F, g, k) && has(cr.H, g, k), "two-agitated state without landed frog");
    Mask gb = square_mask(g, k);
    return {k, cr.F, (cr.H & ~gb) | square_mask(opp(g), k),
            (cr.A & ~gb) | square_mask(pred(g, k), k), cr.crown, cr.agitated};
  }

  if (acount == 1 && !cr.agitated) {
    // Settled chase: the hop landed on square s = the sole agitated square.
    Square s = mask_squares(cr.A, k)[0];
    require(has(cr.F, s, k) && has(cr.H, s, k), "settled chase without landed frog");
    Mask sb = square_mask(s, k);
    Mask H1 = (cr.H & ~sb) | square_mask(opp(s), k);
    Square prev = pred(s, k);
    if (s == cr.crown)  // the crown itself landed here while agitated (cFH)
      return {k, cr.F, H1, square_mask(prev, k), prev, true};
    return {k, cr.F, H1, square_mask(prev, k), cr.crown, false};
  }

  if (acount == 1) {  // agitated, so A = {crown}
    if (!(cr.F & column_mask(c, k))) {
      // The crown's column is empty: the previous step was a companion frog
      // landing (fE/fEH) while the crown stayed agitated. Recover the landing
      // column t as the largest t ≤ c where the alignment chain breaks.
      Mask Fc = cr.F | crown_bit;
      int t = -1;
      for (int j = c; j >= 1; --j) {
        bool top_missing = !has(Fc, {1, j}, k);
        bool hat_break = j == 1 || !has(cr.H, {2, j - 1}, k);
        if (top_missing || hat_break) {
          t = j;
          break;
        }
      }
      require(t >= 1 && t < c, "no landing column before the crown");
      Square landed{2, t};
      require(has(cr.F, landed, k) && has(cr.H, landed, k), "landing square not occupied+hatted");
      Mask lb = square_mask(landed, k);
      Mask F1 = cr.F & ~lb;
      Mask H1 = cr.H & ~lb;
      if (has(cr.F, {1, t}, k)) H1 |= square_mask({1, t}, k);  // hat was stolen
      return {k, F1, H1, cr.A | square_mask(pred(landed, k), k), cr.crown, true};
    }
    // Occupied crown column: the crown landed on its own square last step.
    require(has(cr.F, cr.crown, k) && has(cr.H, cr.crown, k), "crown not landed");
    Square e = eb(cr.F, cr.crown, k);
    Square prev = pred(cr.crown, k);
    if (e == opp(cr.crown)) {
      // Reverse fE: the crown square was empty and a companion was agitated.
      return {k, cr.F & ~crown_bit, cr.H & ~crown_bit,
              crown_bit | square_mask(prev, k), cr.crown, true};
    }
    require(e.c != c, "missing square in the crown's own column");
    if (e.c < c)  // reverse cH: the crown stepped onto a hatted frog
      return {k, cr.F, cr.H, square_mask(prev, k), prev, true};
    // Reverse fFC: a frog hopped under the crown and took it.
    return {k, cr.F, (cr.H & ~crown_bit) | square_mask(opp(cr.crown), k),
            square_mask(prev, k), opp(cr.crown), false};
  }

  // acount == 0: an ending arrangement; the final hop landed at s = (1, f).
  int f = -1;
  for (int j = c; j <= k; ++j) {
    if (!has(cr.F, {2, j}, k) || !has(cr.H, succ({1, j}, k), k)) {
      f = j;
      break;
    }
  }
  require(f >= c, "no final landing column");
  Square s{1, f};
  require(has(cr.F, s, k) && has(cr.H, s, k), "final landing square not occupied+hatted");
  Mask sb = square_mask(s, k);
  Mask F1 = cr.F & ~sb;
  Mask H1 = cr.H & ~sb;
  if (has(F1, opp(s), k)) H1 |= square_mask(opp(s), k);
  Square prev = pred(s, k);
  if (s == cr.crown) return {k, F1, H1, square_mask(prev, k), prev, true};
  return {k, F1, H1, square_mask(prev, k), cr.crown, false};
}

}  // namespace detail

inline CrownedArrangement move_inverse(const CrownedArrangement& cr) {
  const int m = crowned_m(cr);
  if (Clause cl = validate_crowned(cr, m); cl != Clause::ok)
    throw std::domain_error(std::string("move_inverse: invalid arrangement, clause ") +
                            clause_name(cl));
  if (is_starting(cr)) throw std::domain_error("move_inverse: starting arrangement");
  if (cr.crown.r == 2) return rot_crowned(detail::move_inverse_top(rot_crowned(cr)));
  return detail::move_inverse_top(cr);
}

struct RunResult {
  CrownedArrangement end;
  int steps;
};

inline RunResult run_to_end(CrownedArrangement cr) {
  int steps = 0;
  while (!is_ending(cr)) {
    cr = move(cr);
    ++steps;
  }
  return {cr, steps};
}

// Halfway bijection: poke the column of `square` (which must be hatted, with
// the clockwise stretch from opp(square) to square not fully occupied) and
// follow the process until exactly one frog is agitated. The result is an
// (m−1)-frog arrangement whose square-column is empty.
inline HattedArrangement phi(Square square, const HattedArrangement& a) {
  const int k = a.k;
  if (!has(a.H, square, k)) throw std::domain_error("phi: square not hatted");
  Mask stretch = 0;
  for (Square sq : clockwise_path(opp(square), square, k, /*half_open=*/false))
    stretch |= square_mask(sq, k);
  if ((a.F & stretch) == stretch) throw std::domain_error("phi: stretch fully occupied");
  CrownedArrangement cr = poke_crowned(a, square.c).crowned;
  while (__builtin_popcount(cr.A) != 1) cr = move(cr);
  return {k, cr.F, cr.H};
}

inline HattedArrangement phi_inverse(Square square, const HattedArrangement& a) {
  const int k = a.k;
  if (a.F & column_mask(square.c, k))
    throw std::domain_error("phi_inverse: square's column not empty");
  CrownedArrangement cr{k, a.F, a.H, square_mask(square, k), square, true};
  if (Clause cl = validate_crowned(cr, crowned_m(cr)); cl != Clause::ok)
    throw std::domain_error(std::string("phi_inverse: seeded arrangement invalid, clause ") +
                            clause_name(cl));
  while (!is_starting(cr)) cr = move_inverse(cr);
  return {k, cr.F | cr.A, cr.H | square_mask(cr.crown, k)};
}

// The speed bijection and its inverse. Phi maps (arrangement, poked column,
// hopping frog) to an (m−1)-frog arrangement tagged with that frog; Psi
// rebuilds the triple from the first missing square before the tag.
struct HopTriple {
  HattedArrangement arr;
  int column;
  Square frog;
};

struct TaggedArrangement {
  HattedArrangement arr;
  Square frog;
};

inline TaggedArrangement Phi(const HopTriple& in) {
  const int k = in.arr.k;
  if (!has(hop_set(in.arr, in.column), in.frog, k))
    throw std::domain_error("Phi: frog does not hop for this poke");
  Mask hat_bits = in.arr.H & column_mask(in.column, k);
  Square hatted = square_from_bit(__builtin_ctz(hat_bits), k);
  Mask stretch = 0;
  for (Square sq : clockwise_path(opp(hatted), in.frog, k, /*half_open=*/false))
    stretch |= square_mask(sq, k);
  if ((in.arr.F & stretch) == stretch)
    return {{k, in.arr.F & ~square_mask(opp(hatted), k), in.arr.H}, in.frog};
  return {phi(hatted, in.arr), in.frog};
}

inline HopTriple Psi(const TaggedArrangement& in) {
  const int k = in.arr.k;
  Square e = eb(in.arr.F, in.frog, k);
  if (has(in.arr.F, e, k)) throw std::domain_error("Psi: arrangement has no missing square");
  if (has(in.arr.F, opp(e), k))
    return {{k, in.arr.F | square_mask(e, k), in.arr.H}, e.c, in.frog};
  return {phi_inverse(e, in.arr), e.c, in.frog};
}

// Brute-force enumeration of all valid crowned arrangements, in ascending
// (F, H, A, crown, x) order. Intended for small k only.
inline std::vector<CrownedArrangement> enumerate_crowned(int k, int m) {
  if (k < 1 || k > 8) throw std::invalid_argument("enumerate_crowned: bad k");
  std::vector<CrownedArrangement> out;
  for (Mask F = 0; F <= full_mask(k); ++F) {
    int fc = __builtin_popcount(F);
    if (fc > m || fc + 2 < m) continue;
    for (Mask H : hat_placements(F, k)) {
      for (Mask A = 0; A <= full_mask(k); ++A) {
        if (__builtin_popcount(A) != m - fc) continue;
        for (int b = 0; b < 2 * k; ++b) {
          for (int x = 0; x < 2; ++x) {
            CrownedArrangement cr{k, F, H, A, square_from_bit(b, k), x == 0};
            if (crowned_valid(cr, m)) out.push_back(cr);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace frogs
