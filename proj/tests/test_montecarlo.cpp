#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "frogs/formulas.hpp"
#include "frogs/montecarlo.hpp"

using namespace frogs;

namespace {

double rational_to_double(const Rational& r) {
  return rat_num(r).convert_to<double>() / rat_den(r).convert_to<double>();
}

}  // namespace

TEST_CASE("speed estimates are deterministic in the seed", "[montecarlo]") {
  Ring zig{zigzag_word(2)};
  SpeedEstimate a = simulate_speeds(zig, 2, 20000, 42);
  SpeedEstimate b = simulate_speeds(zig, 2, 20000, 42);
  SpeedEstimate c = simulate_speeds(zig, 2, 20000, 43);
  CHECK(a.rate == b.rate);
  CHECK(a.cum_rate == b.cum_rate);
  CHECK(a.cum_se == b.cum_se);
  CHECK(a.rate != c.rate);
  CHECK(a.pokes == 20000);
  CHECK(a.batches == 30);
}

TEST_CASE("worker count does not change the estimate", "[montecarlo]") {
  Ring zig{zigzag_word(3)};
  SpeedEstimate one = simulate_speeds(zig, 3, 30000, 7, 1);
  SpeedEstimate three = simulate_speeds(zig, 3, 30000, 7, 3);
  SpeedEstimate five = simulate_speeds(zig, 3, 30000, 7, 5);
  // bitwise equality: batches own their slots, so scheduling cannot matter
  CHECK(one.rate == three.rate);
  CHECK(one.cum_rate == three.cum_rate);
  CHECK(one.cum_se == three.cum_se);
  CHECK(one.rate == five.rate);

  LcsEstimate l1 = estimate_lcs_gamma(zigzag_word(2), 2, 1, 300, 40, 11, 1);
  LcsEstimate l4 = estimate_lcs_gamma(zigzag_word(2), 2, 1, 300, 40, 11, 4);
  CHECK(l1.mean == l4.mean);
  CHECK(l1.sd == l4.sd);
}

TEST_CASE("zigzag speed estimates settle near the exact values", "[montecarlo]") {
  int k = 2, sigma = 2;
  Ring zig{zigzag_word(k)};
  SpeedEstimate est = simulate_speeds(zig, sigma, 300000, 12345);
  for (int m = 1; m <= 2 * k; ++m) {
    double exact = rational_to_double(cumulative_speed(k, m, sigma));
    double err = std::abs(est.cum_rate[m - 1] - exact);
    double band = std::max(6 * est.cum_se[m - 1], 0.02);
    INFO("m=" << m << " err=" << err << " band=" << band);
    REQUIRE(err <= band);
  }
  // every letter pokes the full ring, so the total rate is exact up to
  // floating-point roundoff in the per-frog sums
  REQUIRE(std::abs(est.cum_rate[2 * k - 1] - 4.0) < 1e-9);
  REQUIRE(est.cum_se[2 * k - 1] < 1e-9);
}

TEST_CASE("ascending speed estimates settle near the baseline formula", "[montecarlo]") {
  int k = 3, sigma = 3;
  Ring asc{ascending_word(k)};
  SpeedEstimate est = simulate_speeds(asc, sigma, 300000, 999);
  Rational cum = 0;
  for (int m = 1; m <= k; ++m) {
    cum += bc_speed(k, m, sigma);
    double err = std::abs(est.cum_rate[m - 1] - rational_to_double(cum));
    double band = std::max(6 * est.cum_se[m - 1], 0.02);
    INFO("m=" << m << " err=" << err << " band=" << band);
    REQUIRE(err <= band);
  }
}

TEST_CASE("burn-in and batch bookkeeping", "[montecarlo]") {
  Ring zig{zigzag_word(2)};
  SpeedEstimate small = simulate_speeds(zig, 2, 10, 1);
  CHECK(small.batches == 10);  // never more batches than pokes
  CHECK(small.pokes == 10);
  CHECK_THROWS_AS(simulate_speeds(zig, 2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate_speeds(zig, 0, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate_speeds(Ring{{}}, 2, 100, 1), std::invalid_argument);
}

TEST_CASE("subsequence rate estimate approaches the exact constant", "[montecarlo]") {
  LcsEstimate est = estimate_lcs_gamma(zigzag_word(2), 2, 1, 400, 60, 2025, 2);
  double exact = 11.0 / 14.0;
  INFO("mean=" << est.mean << " sd=" << est.sd);
  CHECK(std::abs(est.mean - exact) <= 0.05);
  CHECK(est.sd > 0);
  CHECK(est.se == est.sd / std::sqrt(60.0));
  CHECK(est.samples == 60);
  CHECK(est.n == 400);
}

TEST_CASE("degenerate subsequence parameters", "[montecarlo]") {
  // an empty reference matches nothing
  LcsEstimate zero = estimate_lcs_gamma(zigzag_word(2), 2, 0, 100, 5, 3);
  CHECK(zero.mean == 0.0);
  CHECK(zero.sd == 0.0);
  CHECK_THROWS_AS(estimate_lcs_gamma(zigzag_word(2), 2, 1, 0, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(estimate_lcs_gamma(zigzag_word(2), 2, 1, 100, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(estimate_lcs_gamma(zigzag_word(2), 2, Rational(-1), 100, 5, 3),
                  std::invalid_argument);
}
