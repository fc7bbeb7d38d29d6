#pragma once
// Monte Carlo estimators. All draws flow through counter-based splittable
// generators keyed on (seed, stream), so results depend only on the seed and
// the work decomposition, never on the number of worker threads.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "frogs/rational.hpp"
#include "frogs/ring.hpp"
#include "frogs/rng.hpp"
#include "frogs/words.hpp"

namespace frogs {

namespace detail {

// Runs fn(i) for i in [0, jobs) across up to `workers` threads. Each job index
// owns its output slot, so scheduling cannot change results.
template <class Fn>
void parallel_for_jobs(int jobs, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  if (workers > jobs) workers = jobs;
  if (workers <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&fn, w, jobs, workers] {
      for (int i = w; i < jobs; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

struct SpeedEstimate {
  std::vector<double> rate;      // displacement per poke, frog by frog
  std::vector<double> cum_rate;  // partial sums over the m nastiest frogs
  std::vector<double> cum_se;    // batch-means standard errors of cum_rate
  long long pokes = 0;
  int batches = 0;
};

// Estimates frog speeds by running independent chains (one per batch), each
// with its own burn-in from the all-together start, and averaging per-batch
// displacement rates.
inline SpeedEstimate simulate_speeds(const Ring& ring, int sigma, long long n,
                                     std::uint64_t seed, int workers = 1,
                                     long long burn_in = -1) {
  const int ell = static_cast<int>(ring.size());
  if (ell == 0) throw std::invalid_argument("simulate_speeds: empty ring");
  if (sigma < 1) throw std::invalid_argument("simulate_speeds: bad sigma");
  if (n < 1) throw std::invalid_argument("simulate_speeds: need at least one poke");
  if (burn_in < 0) burn_in = 10LL * ell;
  const int batches = static_cast<int>(n < 30 ? n : 30);
  std::vector<std::vector<double>> batch_rate(batches);
  std::vector<long long> batch_len(batches);
  detail::parallel_for_jobs(batches, workers, [&](int b) {
    long long len = n / batches + (b < n % batches ? 1 : 0);
    SplitRng rng(seed, static_cast<std::uint64_t>(b));
    FrogArrangement frogs = identity_arrangement(ell);
    for (long long i = 0; i < burn_in; ++i) {
      int letter = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(sigma)));
      frogs = ring_poke(ring, frogs, letter).frogs;
    }
    std::vector<long long> disp(ell, 0);
    for (long long i = 0; i < len; ++i) {
      int letter = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(sigma)));
      RingPokeResult r = ring_poke(ring, frogs, letter);
      frogs = r.frogs;
      for (int f = 0; f < ell; ++f) disp[f] += r.disp[f];
    }
    batch_rate[b].resize(ell);
    for (int f = 0; f < ell; ++f) batch_rate[b][f] = static_cast<double>(disp[f]) / len;
    batch_len[b] = len;
  });
  SpeedEstimate est;
  est.pokes = n;
  est.batches = batches;
  est.rate.assign(ell, 0.0);
  est.cum_rate.assign(ell, 0.0);
  est.cum_se.assign(ell, 0.0);
  for (int f = 0; f < ell; ++f) {
    double weighted = 0;
    for (int b = 0; b < batches; ++b) weighted += batch_rate[b][f] * batch_len[b];
    est.rate[f] = weighted / n;
  }
  double running = 0;
  for (int f = 0; f < ell; ++f) {
    running += est.rate[f];
    est.cum_rate[f] = running;
    if (batches > 1) {
      double mean = 0;
      std::vector<double> cums(batches, 0.0);
      for (int b = 0; b < batches; ++b) {
        for (int g = 0; g <= f; ++g) cums[b] += batch_rate[b][g];
        mean += cums[b];
      }
      mean /= batches;
      double ss = 0;
      for (double c : cums) ss += (c - mean) * (c - mean);
      est.cum_se[f] = std::sqrt(ss / (batches - 1)) / std::sqrt(static_cast<double>(batches));
    }
  }
  return est;
}

struct LcsEstimate {
  double mean = 0;  // average lcs(reference, random word) / n
  double sd = 0;
  double se = 0;
  long long n = 0;
  int samples = 0;
};

// Estimates the rho-constrained longest-common-subsequence constant for the
// periodic word with the given base: reference length floor(rho*n), random
// opponent of length n.
inline LcsEstimate estimate_lcs_gamma(const Word& base, int sigma, const Rational& rho,
                                      long long n, int samples, std::uint64_t seed,
                                      int workers = 1) {
  if (n < 1) throw std::invalid_argument("estimate_lcs_gamma: bad n");
  if (samples < 1) throw std::invalid_argument("estimate_lcs_gamma: bad sample count");
  if (rho < 0) throw std::invalid_argument("estimate_lcs_gamma: negative rho");
  Alphabet alpha{sigma};
  long long ref_len = static_cast<long long>(floor_rational(rho * Rational(n)));
  Word reference = periodic_expand(base, ref_len);
  std::vector<double> vals(samples);
  detail::parallel_for_jobs(samples, workers, [&](int i) {
    SplitRng rng(seed, static_cast<std::uint64_t>(i));
    Word random_word = sample_word(alpha, n, rng);
    vals[i] = static_cast<double>(lcs_length(reference, random_word)) / static_cast<double>(n);
  });
  LcsEstimate est;
  est.n = n;
  est.samples = samples;
  for (double v : vals) est.mean += v;
  est.mean /= samples;
  if (samples > 1) {
    double ss = 0;
    for (double v : vals) ss += (v - est.mean) * (v - est.mean);
    est.sd = std::sqrt(ss / (samples - 1));
    est.se = est.sd / std::sqrt(static_cast<double>(samples));
  }
  return est;
}

}  // namespace frogs
