#pragma once
// Counter-based splittable RNG. Each (seed, stream) pair yields an independent
// deterministic stream, so parallel workers can draw from disjoint streams and
// merge results in any order without affecting the numbers produced.

#include <cstdint>

namespace frogs {

// SplitMix64 finalizer; full-period bijective mixer on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class SplitRng {
 public:
  using result_type = std::uint64_t;

  SplitRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed) ^ mix64(~stream) ^ 0x517cc1b727220a95ull)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ull; }

  std::uint64_t operator()() { return mix64(key_ ^ mix64(++counter_)); }

  // Uniform draw from [0, n) without modulo bias (Lemire's method).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    while (true) {
      std::uint64_t x = (*this)();
      unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (0ull - n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  // Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace frogs
