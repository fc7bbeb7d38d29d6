#pragma once
// Words over the alphabet {1..σ}: periodic expansion, the zigzag word
// 1⋯kk⋯1 and the ascending word 1⋯k, irreducibility, LCS length, and
// uniform random sampling.

#include <stdexcept>
#include <vector>

#include "frogs/rng.hpp"

namespace frogs {

struct Alphabet {
  int sigma;  // letters are 1..sigma
};

using Word = std::vector<int>;

// First n letters of base repeated forever; periods may be fractional.
inline Word periodic_expand(const Word& base, long long n) {
  if (n < 0) throw std::invalid_argument("periodic_expand: negative length");
  if (n == 0) return {};
  if (base.empty()) throw std::invalid_argument("periodic_expand: empty base");
  Word out(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) out[i] = base[i % base.size()];
  return out;
}

inline Word zigzag_word(int k) {
  if (k < 1) throw std::invalid_argument("zigzag_word: k < 1");
  Word w(2 * k);
  for (int i = 0; i < k; ++i) w[i] = w[2 * k - 1 - i] = i + 1;
  return w;
}

inline Word ascending_word(int k) {
  if (k < 1) throw std::invalid_argument("ascending_word: k < 1");
  Word w(k);
  for (int i = 0; i < k; ++i) w[i] = i + 1;
  return w;
}

// True iff w is not U repeated for any proper divisor-length prefix U.
inline bool is_irreducible(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_irreducible: empty word");
  size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i % d];
    if (repeats) return false;
  }
  return true;
}

// Classical LCS dynamic program with two rolling rows; O(min(|u|,|v|)) memory.
inline int lcs_length(const Word& u, const Word& v) {
  const Word& a = u.size() >= v.size() ? u : v;
  const Word& b = u.size() >= v.size() ? v : u;
  if (b.empty()) return 0;
  std::vector<int> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = prev[j] > cur[j - 1] ? prev[j] : cur[j - 1];
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline Word sample_word(Alphabet alpha, long long n, SplitRng& rng) {
  if (alpha.sigma < 1) throw std::invalid_argument("sample_word: sigma < 1");
  if (n < 0) throw std::invalid_argument("sample_word: negative length");
  Word w(static_cast<size_t>(n));
  for (auto& x : w) x = 1 + static_cast<int>(rng.below(alpha.sigma));
  return w;
}

}  // namespace frogs
