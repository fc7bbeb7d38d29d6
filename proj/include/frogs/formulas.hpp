#pragma once
// Closed forms for frog speeds and the induced longest-common-subsequence
// constants, all exact rationals.

#include <stdexcept>
#include <vector>

#include "frogs/hatted.hpp"
#include "frogs/rational.hpp"

namespace frogs {

// Sum of the speeds of the m nastiest frogs on the zigzag ring of length 2k:
//   2k * f(2k, m-1) / (sigma * f(2k, m)).
inline Rational cumulative_speed(int k, int m, int sigma) {
  if (k < 1) throw std::invalid_argument("cumulative_speed: bad k");
  if (sigma < k) throw std::invalid_argument("cumulative_speed: alphabet smaller than k");
  if (m < 0 || m > 2 * k) throw std::invalid_argument("cumulative_speed: m out of range");
  if (m == 0) return 0;
  return Rational(BigInt(2 * k) * count_f(2 * k, m - 1), BigInt(sigma) * count_f(2 * k, m));
}

// Individual speeds s_1..s_2k on the zigzag ring, by differencing.
inline std::vector<Rational> speeds(int k, int sigma) {
  std::vector<Rational> s;
  s.reserve(2 * k);
  Rational prev = 0;
  for (int m = 1; m <= 2 * k; ++m) {
    Rational cum = cumulative_speed(k, m, sigma);
    s.push_back(cum - prev);
    prev = cum;
  }
  return s;
}

// Speed of the m-th nastiest frog on the ascending ring 12...k:
//   k(k+1) / (sigma (k+2-m)(k+1-m)).
inline Rational bc_speed(int k, int m, int sigma) {
  if (k < 1) throw std::invalid_argument("bc_speed: bad k");
  if (sigma < k) throw std::invalid_argument("bc_speed: alphabet smaller than k");
  if (m < 1 || m > k) throw std::invalid_argument("bc_speed: m out of range");
  return Rational(BigInt(k) * (k + 1),
                  BigInt(sigma) * (k + 2 - m) * (k + 1 - m));
}

struct Threshold {
  int m = 0;            // largest m whose speed is <= rho; 0 when none
  bool equality = false;  // the threshold speed equals rho exactly
};

inline Threshold threshold_from(const std::vector<Rational>& s, const Rational& rho) {
  for (int m = static_cast<int>(s.size()); m >= 1; --m)
    if (s[m - 1] <= rho) return {m, s[m - 1] == rho};
  return {0, false};
}

inline Threshold threshold_m(int k, int sigma, const Rational& rho) {
  return threshold_from(speeds(k, sigma), rho);
}

// gamma for a reference word of period ell with the given speed profile:
//   rho - (1/ell) * sum over frogs slower than rho of (rho - s_m).
inline Rational gamma_from_speeds(const std::vector<Rational>& s, int ell, const Rational& rho) {
  if (ell < 1) throw std::invalid_argument("gamma_from_speeds: bad period");
  if (rho < 0) throw std::invalid_argument("gamma_from_speeds: negative rho");
  Rational total = 0;
  for (const Rational& sm : s)
    if (sm <= rho) total += rho - sm;
  return rho - total / ell;
}

// gamma for the zigzag word 12...kk...21 in closed form.
inline Rational gamma_zigzag(int k, int sigma, const Rational& rho) {
  Threshold t = threshold_m(k, sigma, rho);
  if (t.m == 0) return rho;
  Rational slope = Rational(2 * k - t.m, 2 * k);
  return slope * rho + cumulative_speed(k, t.m, sigma) / (2 * k);
}

// gamma for the ascending word 12...k in closed form.
inline Rational gamma_bc(int k, int sigma, const Rational& rho) {
  int m = 0;
  for (int i = k; i >= 1; --i)
    if (bc_speed(k, i, sigma) <= rho) {
      m = i;
      break;
    }
  if (m == 0) return rho;
  return Rational(k - m, k) * rho + Rational(BigInt(m), BigInt(sigma) * (k + 1 - m));
}

// Verifies by enumeration that total hops over all arrangements and poked
// columns equal 2k times the number of arrangements one frog smaller.
inline bool speed_sum_identity(int k, int m) {
  if (m < 1 || m > 2 * k) throw std::invalid_argument("speed_sum_identity: m out of range");
  BigInt total = 0;
  for (const HattedArrangement& a : enumerate_hatted(k, m))
    for (int c = 1; c <= k; ++c) total += __builtin_popcount(hop_set(a, c));
  return total == BigInt(2 * k) * count_hatted(k, m - 1);
}

}  // namespace frogs
