#pragma once
// Exact stationary distributions of the finite chains, over the rationals.
// The linear algebra is fraction-free: the kernel of (C^T - sigma*I), where
// C[i][j] counts letters sending state i to state j, is computed by integer
// Bareiss elimination, so no intermediate rounding or gcd blowup occurs.

#include <stdexcept>
#include <utility>
#include <vector>

#include "frogs/blind.hpp"
#include "frogs/graph.hpp"
#include "frogs/hatted.hpp"
#include "frogs/rational.hpp"
#include "frogs/words.hpp"

namespace frogs {

namespace detail {

// Bareiss fraction-free elimination to row echelon form, in place.
// Returns the pivot column of each eliminated row.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<BigInt>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  return pivot_col;
}

// Kernel basis of an integer matrix, one rational vector per free column.
inline std::vector<std::vector<Rational>> integer_kernel(std::vector<std::vector<BigInt>> a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivots = bareiss_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int p = pivots[r];
      Rational acc = 0;
      for (int j = p + 1; j < cols; ++j)
        if (x[j] != 0) acc += Rational(a[r][j]) * x[j];
      x[p] = -acc / Rational(a[r][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace detail

struct StationaryResult {
  std::vector<Rational> pi;  // empty when the solution space is degenerate
  int dimension = 0;         // dimension of the stationary solution space
};

// Solves pi^T P = pi^T exactly for the uniform-letter chain of a graph.
template <class State>
StationaryResult exact_stationary(const TransitionGraph<State>& g) {
  const int n = static_cast<int>(g.states.size());
  if (n == 0) throw std::invalid_argument("exact_stationary: empty graph");
  // M = C^T - sigma*I with C the letter-count matrix; kernel vectors of M are
  // the unnormalized stationary solutions.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i)
    for (int j : g.succ[i]) m[j][i] += 1;
  for (int i = 0; i < n; ++i) m[i][i] -= g.sigma;
  auto basis = detail::integer_kernel(std::move(m));
  StationaryResult res;
  res.dimension = static_cast<int>(basis.size());
  if (res.dimension != 1) return res;
  Rational sum = 0;
  for (const Rational& v : basis[0]) sum += v;
  if (sum == 0) throw std::logic_error("exact_stationary: kernel vector sums to zero");
  res.pi.reserve(n);
  for (Rational& v : basis[0]) {
    Rational w = v / sum;
    if (w < 0) throw std::logic_error("exact_stationary: negative stationary mass");
    res.pi.push_back(std::move(w));
  }
  return res;
}

// Verifies that the uniform vector is fixed by the transition operator, by
// direct application rather than via degree counting.
template <class State>
bool verify_uniform_stationary(const TransitionGraph<State>& g) {
  const int n = static_cast<int>(g.states.size());
  if (n == 0) return false;
  std::vector<Rational> u(n, Rational(1, n)), image(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j : g.succ[i]) image[j] += u[i] / g.sigma;
  return image == u;
}

struct FiberDistribution {
  std::vector<Mask> states;     // frog sets of the memoryless projection
  std::vector<Rational> pi;     // hat-count weights, normalized
};

// Blind chain on the zigzag ring with states in grid-mask encoding, matching
// the state order of blind_stationary_from_fibers.
inline TransitionGraph<Mask> blind_grid_graph(int k, int m, int sigma) {
  Ring zig{zigzag_word(k)};
  std::vector<Mask> states;
  for (Mask F = 0; F <= full_mask(k); ++F)
    if (__builtin_popcount(F) == m) states.push_back(F);
  return build_graph(std::move(states), sigma, [zig, k](Mask F, int letter) {
    return ring_to_grid_mask(blind_poke(zig, grid_to_ring_mask(F, k), letter).pads, k);
  });
}

// The stationary law of the projected (hatless) chain: each frog set is
// weighted by how many hat placements it supports.
inline FiberDistribution blind_stationary_from_fibers(int k, int m) {
  if (k < 1 || k > 15) throw std::invalid_argument("blind_stationary_from_fibers: bad k");
  if (m < 0 || m > 2 * k) throw std::invalid_argument("blind_stationary_from_fibers: bad m");
  FiberDistribution out;
  BigInt total = count_hatted(k, m);
  for (Mask F = 0; F <= full_mask(k); ++F) {
    if (__builtin_popcount(F) != m) continue;
    out.states.push_back(F);
    out.pi.emplace_back(BigInt(fiber_count(F, k)), total);
  }
  return out;
}

// Checks pi^T P = pi^T for an arbitrary distribution given alongside a graph
// whose states match one-to-one.
template <class State>
bool is_stationary_for(const TransitionGraph<State>& g, const std::vector<Rational>& pi) {
  const int n = static_cast<int>(g.states.size());
  if (static_cast<int>(pi.size()) != n) return false;
  std::vector<Rational> image(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j : g.succ[i]) image[j] += pi[i] / g.sigma;
  return image == pi;
}

}  // namespace frogs
