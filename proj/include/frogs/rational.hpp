#pragma once
// Exact rational arithmetic plus the parsing/rendering helpers shared by the
// analysis and CLI layers. Backed by boost::multiprecision, which keeps values
// reduced with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace frogs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

// C(n, m) with the usual convention that out-of-range m gives 0.
inline BigInt binomial(long long n, long long m) {
  if (m < 0 || m > n || n < 0) return 0;
  if (m > n - m) m = n - m;
  BigInt r = 1;
  for (long long i = 1; i <= m; ++i) {
    r *= n - m + i;
    r /= i;  // exact: r is always an integer binomial prefix
  }
  return r;
}

inline BigInt floor_rational(const Rational& r) {
  BigInt q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

inline std::string to_fraction_string(const Rational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

// Fixed-point decimal with `digits` fractional digits, rounded half away from
// zero. Used for display only; equality checks always go through Rational.
inline std::string to_decimal_string(const Rational& r, int digits = 6) {
  if (digits < 0) throw std::invalid_argument("to_decimal_string: digits < 0");
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt n = rat_num(r), d = rat_den(r);
  bool neg = n < 0;
  if (neg) n = -n;
  BigInt q = (n * scale * 2 + d) / (d * 2);
  BigInt whole = q / scale;
  BigInt frac_part = q % scale;
  std::string out = (neg && q != 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    std::string frac = frac_part.str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

// Accepts "p/q", a plain integer, or a decimal such as "1.25" or "-.5".
// Decimals convert with their literal power-of-ten denominator; at most 18
// fractional digits are accepted so the denominator stays below 10^18.
inline std::optional<Rational> parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int(p, true) || !is_int(q, false)) return std::nullopt;
    BigInt den(q);
    if (den == 0) return std::nullopt;
    return Rational(BigInt(p), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string w = s.substr(0, dot), f = s.substr(dot + 1);
    bool neg = !w.empty() && w[0] == '-';
    if (!w.empty() && (w[0] == '-' || w[0] == '+')) w = w.substr(1);
    if (w.empty() && f.empty()) return std::nullopt;
    if (!w.empty() && !is_int(w, false)) return std::nullopt;
    if (!f.empty() && !is_int(f, false)) return std::nullopt;
    if (f.size() > 18) return std::nullopt;
    BigInt den = 1;
    for (size_t i = 0; i < f.size(); ++i) den *= 10;
    BigInt num = BigInt(w.empty() ? "0" : w) * den + BigInt(f.empty() ? "0" : f);
    return Rational(neg ? -num : num, den);
  }
  if (!is_int(s, true)) return std::nullopt;
  return Rational(BigInt(s));
}

}  // namespace frogs
