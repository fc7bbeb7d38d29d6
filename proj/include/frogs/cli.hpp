#pragma once
// Command line front end. All computation is delegated to the library; the
// code here only parses flags, loops, and formats. Exit codes: 0 success or
// all checks passed, 1 a verification failed, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frogs/blind.hpp"
#include "frogs/crowned.hpp"
#include "frogs/formulas.hpp"
#include "frogs/graph.hpp"
#include "frogs/hatted.hpp"
#include "frogs/json_io.hpp"
#include "frogs/montecarlo.hpp"
#include "frogs/ring.hpp"
#include "frogs/stationary.hpp"
#include "frogs/words.hpp"

namespace frogs::cli {

namespace detail {

constexpr std::uint64_t kDefaultSeed = 12345;

inline std::string format_square(Square s) {
  return "(" + std::to_string(s.r) + "," + std::to_string(s.c) + ")";
}

inline std::string format_mask(Mask m, int k, const char* sep = ",") {
  std::string out = "{";
  bool first = true;
  for (int b = 0; b < 2 * k; ++b)
    if (m >> b & 1) {
      if (!first) out += sep;
      out += format_square(square_from_bit(b, k));
      first = false;
    }
  return out + "}";
}

inline std::string csv_mask(Mask m, int k) {
  std::string out;
  for (int b = 0; b < 2 * k; ++b)
    if (m >> b & 1) {
      Square s = square_from_bit(b, k);
      if (!out.empty()) out += ";";
      out += std::to_string(s.r) + ":" + std::to_string(s.c);
    }
  return out;
}

inline std::vector<Mask> pad_subsets(int ell, int m) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask(1) << ell); ++s)
    if (__builtin_popcount(s) == m) out.push_back(s);
  return out;
}

struct Output {
  std::ostream* sink = nullptr;
  std::ofstream file;
  std::ostream& os() { return *sink; }
};

inline bool open_output(Output& o, const std::string& path, std::ostream& fallback,
                        std::ostream& err) {
  if (path.empty()) {
    o.sink = &fallback;
    return true;
  }
  o.file.open(path);
  if (!o.file) {
    err << "error: cannot open output file " << path << "\n";
    return false;
  }
  o.sink = &o.file;
  return true;
}

// ---- count ----------------------------------------------------------------

inline int do_count(int k, const std::string& fmt, std::ostream& os) {
  const int n = 2 * k;
  if (fmt == "csv") {
    os << "n,m,f\n";
    for (int m = 0; m <= n; ++m) os << n << "," << m << "," << count_f(n, m).str() << "\n";
  } else if (fmt == "json") {
    json rows = json::array();
    for (int m = 0; m <= n; ++m)
      rows.push_back(json{{"n", n}, {"m", m}, {"f", count_f(n, m).str()}});
    os << rows.dump(2) << "\n";
  } else {
    for (int m = 0; m <= n; ++m)
      os << "f(" << n << "," << m << ") = " << count_f(n, m).str() << "\n";
  }
  return 0;
}

// ---- enumerate ------------------------------------------------------------

inline int do_enumerate(const std::string& process, int k, int m, const std::string& fmt,
                        std::ostream& os) {
  if (process == "hatted") {
    auto states = enumerate_hatted(k, m);
    if (fmt == "json") {
      json arr = json::array();
      for (const auto& a : states) arr.push_back(to_json(a));
      os << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
      os << "index,F,H\n";
      for (size_t i = 0; i < states.size(); ++i)
        os << i << "," << csv_mask(states[i].F, k) << "," << csv_mask(states[i].H, k) << "\n";
    } else {
      for (const auto& a : states)
        os << "F=" << format_mask(a.F, k) << " H=" << format_mask(a.H, k) << "\n";
      os << states.size() << " arrangements\n";
    }
  } else if (process == "crowned") {
    auto states = enumerate_crowned(k, m);
    if (fmt == "json") {
      json arr = json::array();
      for (const auto& c : states) arr.push_back(to_json(c));
      os << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
      os << "index,F,H,A,crown,x\n";
      for (size_t i = 0; i < states.size(); ++i) {
        const auto& c = states[i];
        os << i << "," << csv_mask(c.F, k) << "," << csv_mask(c.H, k) << ","
           << csv_mask(c.A, k) << "," << c.crown.r << ":" << c.crown.c << ","
           << (c.agitated ? "agitated" : "settled") << "\n";
      }
    } else {
      for (const auto& c : states)
        os << "F=" << format_mask(c.F, k) << " H=" << format_mask(c.H, k)
           << " A=" << format_mask(c.A, k) << " crown=" << format_square(c.crown)
           << " x=" << (c.agitated ? "agitated" : "settled") << "\n";
      os << states.size() << " arrangements\n";
    }
  } else {  // blind, on the zigzag identification
    const int ell = 2 * k;
    auto states = pad_subsets(ell, m);
    if (fmt == "json") {
      json arr = json::array();
      for (Mask s : states) {
        json pads = json::array();
        for (int p = 0; p < ell; ++p)
          if (s >> p & 1) pads.push_back(p);
        arr.push_back(json{{"ell", ell}, {"pads", pads}});
      }
      os << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
      os << "index,pads\n";
      for (size_t i = 0; i < states.size(); ++i) {
        std::string pads;
        for (int p = 0; p < ell; ++p)
          if (states[i] >> p & 1) pads += (pads.empty() ? "" : ";") + std::to_string(p);
        os << i << "," << pads << "\n";
      }
    } else {
      for (Mask s : states) {
        os << "{";
        bool first = true;
        for (int p = 0; p < ell; ++p)
          if (s >> p & 1) {
            os << (first ? "" : ",") << p;
            first = false;
          }
        os << "}\n";
      }
      os << states.size() << " arrangements\n";
    }
  }
  return 0;
}

// ---- graph ----------------------------------------------------------------

template <class State>
int print_graph(const TransitionGraph<State>& g, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    os << "from,letter,to\n";
    for (size_t i = 0; i < g.succ.size(); ++i)
      for (int a = 1; a <= g.sigma; ++a) os << i << "," << a << "," << g.succ[i][a - 1] << "\n";
  } else if (fmt == "json") {
    json edges = json::array();
    for (size_t i = 0; i < g.succ.size(); ++i)
      for (int a = 1; a <= g.sigma; ++a)
        edges.push_back(json::array({static_cast<int>(i), a, g.succ[i][a - 1]}));
    os << json{{"sigma", g.sigma},
               {"states", static_cast<int>(g.states.size())},
               {"edges", edges}}
              .dump(2)
       << "\n";
  } else {
    os << g.states.size() << " states, alphabet size " << g.sigma << "\n";
    for (size_t i = 0; i < g.succ.size(); ++i)
      for (int a = 1; a <= g.sigma; ++a)
        os << i << " -" << a << "-> " << g.succ[i][a - 1] << "\n";
  }
  return 0;
}

inline TransitionGraph<HattedArrangement> hatted_graph(int k, int m, int sigma) {
  return build_graph(enumerate_hatted(k, m), sigma, [](const HattedArrangement& a, int letter) {
    return hatted_poke(a, letter).arr;
  });
}

inline TransitionGraph<Mask> blind_graph(const Ring& ring, int m, int sigma) {
  auto states = pad_subsets(static_cast<int>(ring.size()), m);
  return build_graph(std::move(states), sigma, [&ring](Mask s, int letter) {
    return static_cast<Mask>(blind_poke(ring, PadSet(s), letter).pads);
  });
}

inline TransitionGraph<std::vector<int>> ring_graph(const Ring& ring, int sigma) {
  const int ell = static_cast<int>(ring.size());
  std::vector<int> perm(ell);
  for (int i = 0; i < ell; ++i) perm[i] = i;
  std::vector<std::vector<int>> states;
  do states.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return build_graph(std::move(states), sigma, [&ring](const std::vector<int>& pads, int letter) {
    return ring_poke(ring, FrogArrangement{pads}, letter).frogs.pad_of;
  });
}

inline int do_graph(const std::string& process, const std::string& word_kind, int k, int m,
                    int sigma, const std::string& fmt, std::ostream& os) {
  Ring ring{word_kind == "ascending" ? ascending_word(k) : zigzag_word(k)};
  if (process == "hatted") return print_graph(hatted_graph(k, m, sigma), fmt, os);
  if (process == "blind") return print_graph(blind_graph(ring, m, sigma), fmt, os);
  if (static_cast<int>(ring.size()) > 7)
    throw std::invalid_argument("graph: full process limited to rings of length <= 7");
  return print_graph(ring_graph(ring, sigma), fmt, os);
}

// ---- verify ---------------------------------------------------------------

struct Reporter {
  std::ostream& os;
  bool all_ok = true;
  void note(const std::string& what, bool ok) {
    os << what << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) all_ok = false;
  }
};

// The hatted chain is regular, and so is the blind chain for the ascending
// word. The blind chain for the zigzag word is not regular in general; that
// is what the hats repair, so it is deliberately absent here.
inline void verify_regular(int k, int sigma, Reporter& rep) {
  for (int m = 0; m <= 2 * k; ++m) {
    auto rr = check_regular(hatted_graph(k, m, sigma));
    rep.note("hatted k=" + std::to_string(k) + " m=" + std::to_string(m) + " regular", rr.regular);
  }
  Ring asc{ascending_word(k)};
  for (int m = 0; m <= k; ++m) {
    auto rr = check_regular(blind_graph(asc, m, sigma));
    rep.note("blind ascending k=" + std::to_string(k) + " m=" + std::to_string(m) + " regular",
             rr.regular);
  }
}

inline void verify_uniform(int k, int sigma, Reporter& rep) {
  for (int m = 0; m <= 2 * k; ++m) {
    auto g = hatted_graph(k, m, sigma);
    bool uni = verify_uniform_stationary(g);
    rep.note("hatted k=" + std::to_string(k) + " m=" + std::to_string(m) + " uniform stationary",
             uni);
    rep.note("hatted k=" + std::to_string(k) + " m=" + std::to_string(m) +
                 " uniform iff regular", uni == check_regular(g).regular);
  }
  Ring asc{ascending_word(k)};
  for (int m = 0; m <= k; ++m)
    rep.note("blind ascending k=" + std::to_string(k) + " m=" + std::to_string(m) +
                 " uniform stationary",
             verify_uniform_stationary(blind_graph(asc, m, sigma)));
}

inline void verify_fibers(int k, int sigma, Reporter& rep) {
  for (int m = 0; m <= 2 * k; ++m) {
    FiberDistribution fd = blind_stationary_from_fibers(k, m);
    auto g = blind_grid_graph(k, m, sigma);
    bool match = g.states == fd.states;
    rep.note("fiber distribution k=" + std::to_string(k) + " m=" + std::to_string(m) +
                 " stationary",
             match && is_stationary_for(g, fd.pi));
  }
}

inline void verify_coupling(int k, int trials, std::uint64_t seed, Reporter& rep) {
  // Exhaustive: unhatting a poked arrangement equals poking the unhatted one.
  bool hat_ok = true;
  for (int m = 0; m <= 2 * k && hat_ok; ++m)
    for (const auto& arr : enumerate_hatted(k, m)) {
      for (int a = 1; a <= k; ++a) {
        HattedPokeResult hp = hatted_poke(arr, a);
        Ring zig{zigzag_word(k)};
        PadSet before = grid_to_ring_mask(doff(arr), k);
        BlindPokeResult bp = blind_poke(zig, before, a);
        if (grid_to_ring_mask(doff(hp.arr), k) != bp.pads || hp.hop != bp.hop) {
          hat_ok = false;
          break;
        }
      }
      if (!hat_ok) break;
    }
  rep.note("hatted/blind coupling k<=" + std::to_string(k) + " exhaustive", hat_ok);

  // Randomized: the nastiest-m projection of the full process is the blind one.
  SplitRng rng(seed, 0);
  bool ring_ok = true;
  for (int t = 0; t < trials && ring_ok; ++t) {
    int ell = 2 + static_cast<int>(rng.below(7));  // ring length in [2, 8]
    int sig = 1 + static_cast<int>(rng.below(4));
    Word labels(ell);
    for (int i = 0; i < ell; ++i) labels[i] = 1 + static_cast<int>(rng.below(sig));
    Ring ring{labels};
    std::vector<int> pads(ell);
    for (int i = 0; i < ell; ++i) pads[i] = i;
    for (int i = ell - 1; i > 0; --i)
      std::swap(pads[i], pads[rng.below(static_cast<std::uint64_t>(i + 1))]);
    FrogArrangement f{pads};
    int a = 1 + static_cast<int>(rng.below(sig));
    RingPokeResult rp = ring_poke(ring, f, a);
    for (int m = 0; m <= ell; ++m) {
      PadSet proj = pads_to_set(project_nastiest(f, m));
      BlindPokeResult bp = blind_poke(ring, proj, a);
      long long disp_sum = 0;
      for (int i = 0; i < m; ++i) disp_sum += rp.disp[i];
      if (pads_to_set(project_nastiest(rp.frogs, m)) != bp.pads || disp_sum != bp.hop) {
        ring_ok = false;
        break;
      }
    }
  }
  rep.note("full/blind projection, " + std::to_string(trials) + " random trials", ring_ok);
}

inline void verify_bijections(int k, Reporter& rep) {
  for (int m = 0; m <= 2 * k; ++m) {
    auto all = enumerate_crowned(k, m);
    std::set<CrownedArrangement> universe(all.begin(), all.end());
    std::set<CrownedArrangement> images;
    bool closed = true, injective = true, round_trip = true, rot_commute = true;
    for (const auto& c : all) {
      if (!is_ending(c)) {
        CrownedArrangement next = move(c);
        if (!universe.count(next) || is_starting(next)) closed = false;
        if (!images.insert(next).second) injective = false;
        if (move_inverse(next) != c) round_trip = false;
        if (move(rot_crowned(c)) != rot_crowned(next)) rot_commute = false;
      }
      if (!is_starting(c) && move(move_inverse(c)) != c) round_trip = false;
    }
    size_t non_start = 0, non_end = 0;
    for (const auto& c : all) {
      if (!is_starting(c)) ++non_start;
      if (!is_ending(c)) ++non_end;
    }
    bool surjective = injective && images.size() == non_start && non_end == non_start;
    std::string tag = "crowned k=" + std::to_string(k) + " m=" + std::to_string(m);
    rep.note(tag + " move closed into non-starting", closed);
    rep.note(tag + " move bijective", injective && surjective);
    rep.note(tag + " inverse round-trip", round_trip);
    rep.note(tag + " move commutes with rot", rot_commute);
  }

  // Crowned runs reproduce the hatted process poke for poke.
  bool runs_ok = true;
  for (int m = 0; m <= 2 * k && runs_ok; ++m)
    for (const auto& arr : enumerate_hatted(k, m)) {
      for (int c = 1; c <= k; ++c) {
        CrownedPokeResult pr = poke_crowned(arr, c);
        HattedPokeResult hp = hatted_poke(arr, c);
        if (!pr.poked) {
          if (hp.hop != 0 || hp.arr != arr) runs_ok = false;
          continue;
        }
        RunResult run = run_to_end(pr.crowned);
        if (dethrone(run.end) != hp.arr || run.steps != hp.hop) runs_ok = false;
      }
      if (!runs_ok) break;
    }
  rep.note("crowned k=" + std::to_string(k) + " runs match hatted pokes", runs_ok);

  // Halfway bijection round-trips on its full domain and codomain.
  bool phi_ok = true;
  for (int m = 1; m <= 2 * k && phi_ok; ++m) {
    for (const auto& arr : enumerate_hatted(k, m)) {
      for (Square sq : frogs::detail::mask_squares(arr.H, k)) {
        Mask stretch = 0;
        for (Square p : clockwise_path(opp(sq), sq, k, false)) stretch |= square_mask(p, k);
        if ((arr.F & stretch) == stretch) continue;
        HattedArrangement down = phi(sq, arr);
        if (down.F & column_mask(sq.c, k)) phi_ok = false;
        if (phi_inverse(sq, down) != arr) phi_ok = false;
      }
    }
    for (const auto& arr : enumerate_hatted(k, m - 1))
      for (int c = 1; c <= k; ++c) {
        if (arr.F & column_mask(c, k)) continue;
        for (int r = 1; r <= 2; ++r) {
          Square sq{r, c};
          HattedArrangement up = phi_inverse(sq, arr);
          if (phi(sq, up) != arr) phi_ok = false;
        }
      }
  }
  rep.note("halfway bijection k=" + std::to_string(k) + " round-trips", phi_ok);

  // Hop-triple bijection between pokes and tagged smaller arrangements.
  bool psi_ok = true;
  for (int m = 1; m <= 2 * k && psi_ok; ++m) {
    std::set<std::pair<HattedArrangement, Square>> seen;
    size_t domain = 0;
    for (const auto& arr : enumerate_hatted(k, m))
      for (int c = 1; c <= k; ++c)
        for (Square g : frogs::detail::mask_squares(hop_set(arr, c), k)) {
          ++domain;
          TaggedArrangement t = Phi({arr, c, g});
          if (t.frog != g) psi_ok = false;
          if (!seen.insert({t.arr, t.frog}).second) psi_ok = false;
          HopTriple back = Psi(t);
          if (back.arr != arr || back.column != c || back.frog != g) psi_ok = false;
        }
    size_t codomain = count_hatted(k, m - 1).convert_to<size_t>() * 2 * k;
    if (domain != codomain) psi_ok = false;
  }
  rep.note("hop bijection k=" + std::to_string(k) + " round-trips", psi_ok);
}

inline void verify_speed_identity(int k, Reporter& rep) {
  for (int m = 1; m <= 2 * k; ++m)
    rep.note("hop sum k=" + std::to_string(k) + " m=" + std::to_string(m) +
                 " equals 2k*f(2k,m-1)",
             speed_sum_identity(k, m));
}

inline void verify_corner(int k, Reporter& rep) {
  for (int m = 0; m <= 2 * k - 1; ++m) {
    BigInt with_corner = 0, without_smaller = 0;
    for (const auto& a : enumerate_hatted(k, m))
      if (has(a.F, {1, k}, k)) with_corner += 1;
    if (m >= 1)
      for (const auto& a : enumerate_hatted(k, m - 1))
        if (!has(a.F, {1, k}, k)) without_smaller += 1;
    bool ok = with_corner == without_smaller;
    if (m >= 1) ok = ok && with_corner == count_f(2 * k - 1, m - 1);
    rep.note("corner slice k=" + std::to_string(k) + " m=" + std::to_string(m), ok);
  }
}

// ---- speeds / gamma / lcs-sim --------------------------------------------

inline int do_speeds_exact(const std::string& word_kind, int k, int sigma,
                           const std::string& fmt, std::ostream& os) {
  std::vector<Rational> s;
  if (word_kind == "ascending")
    for (int m = 1; m <= k; ++m) s.push_back(bc_speed(k, m, sigma));
  else
    s = speeds(k, sigma);
  if (fmt == "csv") {
    os << "k,sigma,m,speed,decimal\n";
    for (size_t m = 1; m <= s.size(); ++m)
      os << k << "," << sigma << "," << m << "," << to_fraction_string(s[m - 1]) << ","
         << to_decimal_string(s[m - 1]) << "\n";
  } else if (fmt == "json") {
    json rows = json::array();
    for (size_t m = 1; m <= s.size(); ++m)
      rows.push_back(json{{"k", k},
                          {"sigma", sigma},
                          {"m", static_cast<int>(m)},
                          {"speed", to_fraction_string(s[m - 1])},
                          {"decimal", to_decimal_string(s[m - 1])}});
    os << rows.dump(2) << "\n";
  } else {
    for (size_t m = 1; m <= s.size(); ++m)
      os << "s_" << m << " = " << to_fraction_string(s[m - 1]) << " ≈ "
         << to_decimal_string(s[m - 1]) << "\n";
  }
  return 0;
}

inline int do_speeds_mc(const std::string& word_kind, int k, int sigma, long long n,
                        std::uint64_t seed, int workers, const std::string& fmt,
                        std::ostream& os) {
  Ring ring{word_kind == "ascending" ? ascending_word(k) : zigzag_word(k)};
  SpeedEstimate est = simulate_speeds(ring, sigma, n, seed, workers);
  const int ell = static_cast<int>(ring.size());
  std::vector<Rational> exact_cum(ell);
  Rational acc = 0;
  for (int m = 1; m <= ell; ++m) {
    acc += word_kind == "ascending" ? bc_speed(k, m, sigma)
                                    : speeds(k, sigma)[m - 1];
    exact_cum[m - 1] = acc;
  }
  std::string run_id = "speeds-" + word_kind + "-k" + std::to_string(k);
  if (fmt == "csv") {
    os << "run_id,k,sigma,rho,n,samples,statistic,value,stderr,seed\n";
    for (int m = 1; m <= ell; ++m)
      os << run_id << "," << k << "," << sigma << ",," << n << "," << est.batches
         << ",cum_rate[" << m << "]," << est.cum_rate[m - 1] << "," << est.cum_se[m - 1]
         << "," << seed << "\n";
  } else if (fmt == "json") {
    json rows = json::array();
    for (int m = 1; m <= ell; ++m)
      rows.push_back(json{{"run_id", run_id},
                          {"k", k},
                          {"sigma", sigma},
                          {"n", n},
                          {"samples", est.batches},
                          {"statistic", "cum_rate[" + std::to_string(m) + "]"},
                          {"value", est.cum_rate[m - 1]},
                          {"stderr", est.cum_se[m - 1]},
                          {"seed", seed}});
    os << rows.dump(2) << "\n";
  } else {
    os << run_id << ": n=" << n << " batches=" << est.batches << " seed=" << seed << "\n";
    for (int m = 1; m <= ell; ++m)
      os << "cum s_" << m << " = " << est.cum_rate[m - 1] << " ± " << est.cum_se[m - 1]
         << "  (exact " << to_decimal_string(exact_cum[m - 1]) << ")\n";
  }
  return 0;
}

inline int do_gamma(const std::string& word_kind, int k, int sigma, const Rational& rho,
                    const std::string& fmt, std::ostream& os) {
  Threshold t;
  Rational gamma;
  if (word_kind == "ascending") {
    std::vector<Rational> s;
    for (int m = 1; m <= k; ++m) s.push_back(bc_speed(k, m, sigma));
    t = threshold_from(s, rho);
    gamma = gamma_bc(k, sigma, rho);
  } else {
    t = threshold_m(k, sigma, rho);
    gamma = gamma_zigzag(k, sigma, rho);
  }
  if (fmt == "csv") {
    os << "k,sigma,rho,m,equality,gamma,decimal\n";
    os << k << "," << sigma << "," << to_fraction_string(rho) << "," << t.m << ","
       << (t.equality ? "true" : "false") << "," << to_fraction_string(gamma) << ","
       << to_decimal_string(gamma) << "\n";
  } else if (fmt == "json") {
    os << json{{"k", k},
               {"sigma", sigma},
               {"rho", to_fraction_string(rho)},
               {"m", t.m},
               {"equality", t.equality},
               {"gamma", to_fraction_string(gamma)},
               {"decimal", to_decimal_string(gamma)}}
              .dump(2)
       << "\n";
  } else {
    os << "m=" << t.m << " equality=" << (t.equality ? "true" : "false") << " gamma="
       << to_fraction_string(gamma) << " ≈ " << to_decimal_string(gamma) << "\n";
  }
  return 0;
}

inline int do_lcs_sim(const std::string& word_kind, int k, int sigma, const Rational& rho,
                      long long n, int samples, std::uint64_t seed, int workers,
                      const std::string& fmt, std::ostream& os) {
  Word base = word_kind == "ascending" ? ascending_word(k) : zigzag_word(k);
  LcsEstimate est = estimate_lcs_gamma(base, sigma, rho, n, samples, seed, workers);
  Rational exact = word_kind == "ascending" ? gamma_bc(k, sigma, rho)
                                            : gamma_zigzag(k, sigma, rho);
  std::string run_id = "lcs-" + word_kind + "-k" + std::to_string(k);
  if (fmt == "csv") {
    os << "run_id,k,sigma,rho,n,samples,statistic,value,stderr,seed\n";
    os << run_id << "," << k << "," << sigma << "," << to_fraction_string(rho) << "," << n
       << "," << samples << ",lcs_over_n," << est.mean << "," << est.se << "," << seed
       << "\n";
  } else if (fmt == "json") {
    os << json{{"run_id", run_id},
               {"k", k},
               {"sigma", sigma},
               {"rho", to_fraction_string(rho)},
               {"n", n},
               {"samples", samples},
               {"statistic", "lcs_over_n"},
               {"value", est.mean},
               {"stderr", est.se},
               {"seed", seed},
               {"exact_gamma", to_fraction_string(exact)}}
              .dump(2)
       << "\n";
  } else {
    os << run_id << ": n=" << n << " samples=" << samples << " seed=" << seed << "\n";
    os << "mean lcs/n = " << est.mean << " ± " << est.se << "  (gamma = "
       << to_fraction_string(exact) << " ≈ " << to_decimal_string(exact) << ")\n";
  }
  return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"frog processes: enumeration, exact speeds, and verification"};
  app.require_subcommand(1);

  std::string fmt = "text", out_path, process = "hatted", word_kind = "zigzag", what,
              rho_str = "1";
  int k = 3, m = 0, sigma = 0, samples = 100, workers = 1, trials = 10000;
  long long n = 0;
  std::uint64_t seed = detail::kDefaultSeed;
  bool m_given = false, exact_flag = false, mc_flag = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", fmt)->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* c_count = app.add_subcommand("count", "hatted arrangement counting table");
  c_count->add_option("--k", k)->required()->check(CLI::Range(1, 15));
  add_common(c_count);

  CLI::App* c_enum = app.add_subcommand("enumerate", "dump a state space");
  c_enum->add_option("--k", k)->required()->check(CLI::Range(1, 8));
  c_enum->add_option("--m", m)->required()->check(CLI::Range(0, 16));
  c_enum->add_option("--process", process)
      ->check(CLI::IsMember({"hatted", "crowned", "blind"}));
  add_common(c_enum);

  CLI::App* c_graph = app.add_subcommand("graph", "transition graph edge list");
  c_graph->add_option("--k", k)->required()->check(CLI::Range(1, 8));
  c_graph->add_option("--m", m)->check(CLI::Range(0, 16));
  c_graph->add_option("--sigma", sigma)->check(CLI::Range(1, 64));
  c_graph->add_option("--process", process)->check(CLI::IsMember({"hatted", "blind", "ring"}));
  c_graph->add_option("--word", word_kind)->check(CLI::IsMember({"zigzag", "ascending"}));
  add_common(c_graph);

  CLI::App* c_verify = app.add_subcommand("verify", "run an exhaustive check suite");
  c_verify
      ->add_option("what", what, "one of regular, uniform, fibers, coupling, bijections, "
                                 "speed-identity, corner")
      ->required()
      ->check(CLI::IsMember({"regular", "uniform", "fibers", "coupling", "bijections",
                             "speed-identity", "corner"}));
  c_verify->add_option("--k", k)->check(CLI::Range(1, 6));
  c_verify->add_option("--sigma", sigma)->check(CLI::Range(1, 64));
  c_verify->add_option("--trials", trials)->check(CLI::Range(1, 10000000));
  c_verify->add_option("--seed", seed);
  add_common(c_verify);

  CLI::App* c_speeds = app.add_subcommand("speeds", "frog speeds, exact or simulated");
  c_speeds->add_option("--k", k)->required()->check(CLI::Range(1, 64));
  c_speeds->add_option("--sigma", sigma)->check(CLI::Range(1, 1000000));
  c_speeds->add_flag("--exact", exact_flag);
  c_speeds->add_flag("--mc", mc_flag);
  c_speeds->add_option("--word", word_kind)->check(CLI::IsMember({"zigzag", "ascending"}));
  c_speeds->add_option("--n", n)->check(CLI::Range(1LL, 1000000000LL));
  c_speeds->add_option("--seed", seed);
  c_speeds->add_option("--workers", workers)->check(CLI::Range(1, 256));
  add_common(c_speeds);

  CLI::App* c_gamma = app.add_subcommand("gamma", "exact constrained LCS constant");
  c_gamma->add_option("--k", k)->required()->check(CLI::Range(1, 64));
  c_gamma->add_option("--sigma", sigma)->check(CLI::Range(1, 1000000));
  c_gamma->add_option("--rho", rho_str);
  c_gamma->add_option("--word", word_kind)->check(CLI::IsMember({"zigzag", "ascending"}));
  add_common(c_gamma);

  CLI::App* c_lcs = app.add_subcommand("lcs-sim", "Monte Carlo LCS estimate");
  c_lcs->add_option("--k", k)->required()->check(CLI::Range(1, 64));
  c_lcs->add_option("--sigma", sigma)->check(CLI::Range(1, 1000000));
  c_lcs->add_option("--rho", rho_str);
  c_lcs->add_option("--word", word_kind)->check(CLI::IsMember({"zigzag", "ascending"}));
  c_lcs->add_option("--n", n)->check(CLI::Range(1LL, 100000000LL));
  c_lcs->add_option("--samples", samples)->check(CLI::Range(1, 1000000));
  c_lcs->add_option("--seed", seed);
  c_lcs->add_option("--workers", workers)->check(CLI::Range(1, 256));
  add_common(c_lcs);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("frogs");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  m_given = c_graph->count("--m") > 0 || c_enum->count("--m") > 0;
  if (sigma == 0) sigma = k;

  detail::Output output;
  if (!detail::open_output(output, out_path, out, err)) return 2;

  try {
    if (app.got_subcommand(c_count)) return detail::do_count(k, fmt, output.os());
    if (app.got_subcommand(c_enum))
      return detail::do_enumerate(process, k, m, fmt, output.os());
    if (app.got_subcommand(c_graph)) {
      if (process != "ring" && !m_given)
        throw std::invalid_argument("graph: --m is required for hatted and blind graphs");
      return detail::do_graph(process, word_kind, k, m, sigma, fmt, output.os());
    }
    if (app.got_subcommand(c_verify)) {
      detail::Reporter rep{output.os()};
      if (what == "regular") detail::verify_regular(k, sigma, rep);
      else if (what == "uniform") detail::verify_uniform(k, sigma, rep);
      else if (what == "fibers") detail::verify_fibers(k, sigma, rep);
      else if (what == "coupling") detail::verify_coupling(k, trials, seed, rep);
      else if (what == "bijections") detail::verify_bijections(k, rep);
      else if (what == "speed-identity") detail::verify_speed_identity(k, rep);
      else detail::verify_corner(k, rep);
      output.os() << (rep.all_ok ? "all checks passed" : "FAILURES present") << "\n";
      return rep.all_ok ? 0 : 1;
    }
    if (app.got_subcommand(c_speeds)) {
      if (exact_flag && mc_flag)
        throw std::invalid_argument("speeds: choose one of --exact, --mc");
      if (mc_flag) {
        if (n == 0) n = 1000000;
        return detail::do_speeds_mc(word_kind, k, sigma, n, seed, workers, fmt, output.os());
      }
      return detail::do_speeds_exact(word_kind, k, sigma, fmt, output.os());
    }
    if (app.got_subcommand(c_gamma) || app.got_subcommand(c_lcs)) {
      auto rho = parse_rational(rho_str);
      if (!rho || *rho < 0) throw std::invalid_argument("bad --rho value: " + rho_str);
      if (app.got_subcommand(c_gamma))
        return detail::do_gamma(word_kind, k, sigma, *rho, fmt, output.os());
      if (n == 0) n = 2000;
      return detail::do_lcs_sim(word_kind, k, sigma, *rho, n, samples, seed, workers, fmt,
                                output.os());
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace frogs::cli
