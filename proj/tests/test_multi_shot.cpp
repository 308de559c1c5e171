// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "doctest.h"
#include "qi/multi_shot.hpp"
#include "qi/single_shot.hpp"

using namespace qi;

namespace {

double ln_q_direct(const ShotProbs& pr, double s) {
  return std::log(std::pow(pr.p_d, s) * std::pow(pr.p_f, 1.0 - s) +
                  std::pow(1.0 - pr.p_d, s) * std::pow(1.0 - pr.p_f, 1.0 - s));
}

// Independent minimizer: golden-section search on ln Q(s).
double s_opt_golden(const ShotProbs& pr) {
  const double invphi = 0.6180339887498949;
  double a = 1e-12;
  double b = 1.0 - 1e-12;
  while (b - a > 1e-12) {
    const double x1 = b - invphi * (b - a);
    const double x2 = a + invphi * (b - a);
    if (ln_q_direct(pr, x1) < ln_q_direct(pr, x2))
      b = x2;
    else
      a = x1;
  }
  return 0.5 * (a + b);
}

double ln_binom_pmf(std::uint64_t n, double p, std::uint64_t k) {
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0) + double(k) * std::log(p) +
         double(n - k) * std::log1p(-p);
}

} // namespace

TEST_CASE("LRT threshold: symmetric case lands mid-count") {
  // p_F = 0.2, p_D = 0.8, one shot: gamma = ln 4 / ln 16 = 1/2.
  CHECK(lrt_threshold(ShotProbs(0.2, 0.8), 1.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // Threshold scales linearly with the number of shots.
  CHECK(lrt_threshold(ShotProbs(0.2, 0.8), 100.0) ==
        doctest::Approx(50.0).epsilon(1e-14));
}

TEST_CASE("Chernoff optimizer matches an independent golden-section search") {
  CHECK(chernoff_s_opt(ShotProbs(0.2, 0.8)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double p_f = 1e-6 + (0.98 - 1e-6) * uni(rng);
    const double p_d = p_f + (0.999 - p_f) * std::max(1e-6, uni(rng));
    const ShotProbs pr(p_f, p_d);
    const double s_star = chernoff_s_opt(pr);
    CHECK(std::abs(s_star - s_opt_golden(pr)) < 1e-6);
    const auto ch = chernoff_bound(pr);
    CHECK(ch.ln_q == doctest::Approx(ln_q_direct(pr, s_star)).epsilon(1e-10));
    CHECK(ch.ln_q < 0.0);
    // Stationary point really is the minimum.
    CHECK(ch.ln_q <= ln_q_direct(pr, std::clamp(s_star + 0.01, 1e-9, 1.0 - 1e-9)) + 1e-15);
    CHECK(ch.ln_q <= ln_q_direct(pr, std::clamp(s_star - 0.01, 1e-9, 1.0 - 1e-9)) + 1e-15);
  }
}

TEST_CASE("binomial range sum matches direct enumeration") {
  const std::uint64_t n = 12;
  const double p = 0.37;
  for (const auto [lo, hi] : {std::pair<int, int>{0, 12}, {3, 7}, {9, 12},
                              {0, 0}, {12, 12}}) {
    double direct = 0.0;
    for (int k = lo; k <= hi; ++k)
      direct += std::exp(ln_binom_pmf(n, p, k));
    CHECK(ln_binomial_range(n, p, lo, hi) ==
          doctest::Approx(std::log(direct)).epsilon(1e-12));
  }
  CHECK(ln_binomial_range(n, p, 5, 4) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("exact LRT error matches brute-force enumeration at n_t = 10") {
  for (const auto [p_f, p_d] : {std::pair<double, double>{0.3, 0.31},
                                {0.2, 0.8},
                                {0.01, 0.4}}) {
    const ShotProbs pr(p_f, p_d);
    const std::uint64_t n_t = 10;
    const double gamma = lrt_threshold(pr, double(n_t));
    const auto k0 = static_cast<std::int64_t>(std::ceil(gamma));
    double fa = 0.0;
    double miss = 0.0;
    for (std::int64_t k = 0; k <= 10; ++k) {
      if (k >= k0) fa += std::exp(ln_binom_pmf(n_t, p_f, k));
      else miss += std::exp(ln_binom_pmf(n_t, p_d, k));
    }
    CHECK(exact_ln_error(pr, n_t).ln_p ==
          doctest::Approx(std::log(0.5 * (fa + miss))).epsilon(1e-12));
  }
}

TEST_CASE("one-shot symmetric error is (p_F + 1 - p_D)/2") {
  CHECK(exact_ln_error(ShotProbs(0.2, 0.8), 1).prob() ==
        doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("Chernoff bound dominates the exact error") {
  struct Case {
    double p_f, p_d;
    std::uint64_t n_t;
  };
  for (const auto& [p_f, p_d, n_t] :
       {Case{1e-3, 5e-2, 100}, Case{0.2, 0.8, 25}, Case{0.3, 0.31, 2000}}) {
    const ShotProbs pr(p_f, p_d);
    const auto ch = chernoff_bound(pr);
    CHECK(exact_ln_error(pr, n_t).ln_p <=
          ch.ln_bound(double(n_t)).ln_p + 1e-9);
  }
}

TEST_CASE("penalty: range, monotonicity, frozen large-M values") {
  for (const double n_b : {1.0, 100.0}) {
    double prev = 0.0;
    for (const double m : {1e2, 1e4, 1e6, 1e9, 1e12, 1e15, 1e18}) {
      const auto pt = penalty(ScenarioParams(0.001, n_b, m));
      CHECK(pt.penalty > 0.0);
      CHECK(pt.penalty < 1.0);
      CHECK(pt.penalty > prev); // strictly increasing in M
      prev = pt.penalty;
    }
  }
  // Frozen by high-precision evaluation of -ln Q(s_o) (n_b+1)/kappa.
  CHECK(penalty(ScenarioParams(0.001, 1.0, 1e18)).penalty ==
        doctest::Approx(0.8687).epsilon(2e-3));
  CHECK(penalty(ScenarioParams(0.001, 100.0, 1e18)).penalty ==
        doctest::Approx(0.8530).epsilon(2e-3));
  // Below the M_0 threshold the penalty is undefined.
  CHECK_THROWS_AS(penalty(ScenarioParams(0.001, 100.0, 30.0)), error);
}

TEST_CASE("penalty's advantage flag flips at the coherent-state parity") {
  // Published Table-entry targets: 0.25 sits below CS parity for both
  // brightnesses (no quantum advantage), 10^-0.1 sits above it.
  const double m_low = solve_m_for_penalty(0.001, 1.0, 0.25);
  CHECK_FALSE(penalty(ScenarioParams(0.001, 1.0, m_low)).has_advantage_vs_cs);
  const double m_high = solve_m_for_penalty(0.001, 1.0, std::pow(10.0, -0.1));
  CHECK(penalty(ScenarioParams(0.001, 1.0, m_high)).has_advantage_vs_cs);
}

TEST_CASE("solve_m reproduces the published dimensionalities within 1%") {
  const double t_high = std::pow(10.0, -0.1);
  CHECK(solve_m_for_penalty(0.001, 100.0, t_high) ==
        doctest::Approx(2.27e13).epsilon(0.01));
  CHECK(solve_m_for_penalty(0.001, 100.0, 0.25) ==
        doctest::Approx(7.34e5).epsilon(0.01));
  CHECK(solve_m_for_penalty(0.001, 1.0, t_high) ==
        doctest::Approx(2.21e11).epsilon(0.01));
  CHECK(solve_m_for_penalty(0.001, 1.0, 0.25) ==
        doctest::Approx(7.33e3).epsilon(0.01));
  // Postcondition: achieved penalty within 1e-6 relative of the target.
  const double m = solve_m_for_penalty(0.001, 1.0, 0.5);
  CHECK(std::abs(penalty(ScenarioParams(0.001, 1.0, m)).penalty - 0.5) <=
        5e-7);
}

TEST_CASE("solve_m reports an unreachable target as no-root") {
  try {
    solve_m_for_penalty(0.001, 1.0, 0.95); // above the 1e20 ceiling value
    FAIL("expected no_root");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_root);
  }
}

TEST_CASE("Monte Carlo: sanity, determinism, thread independence") {
  const ShotProbs pr(0.2, 0.8);
  const auto est = mc_error(pr, 1, 100000, 42, 1);
  // One-shot exact error is 0.2; the estimate must land within 3 sigma.
  CHECK(std::abs(est.p_err_hat - 0.2) <= 3.0 * est.std_err);
  CHECK(est.std_err ==
        doctest::Approx(std::sqrt(est.p_err_hat * (1 - est.p_err_hat) /
                                  100000.0)));
  // Bit-identical across thread counts and repeat runs.
  const auto est4 = mc_error(pr, 1, 100000, 42, 4);
  const auto est3 = mc_error(pr, 1, 100000, 42, 3);
  CHECK(est.p_err_hat == est4.p_err_hat);
  CHECK(est.p_err_hat == est3.p_err_hat);
  // A different seed gives a different (but nearby) estimate.
  const auto est_other = mc_error(pr, 1, 100000, 43, 2);
  CHECK(est_other.p_err_hat != est.p_err_hat);
  CHECK(std::abs(est_other.p_err_hat - 0.2) <= 4.0 * est.std_err);
}

TEST_CASE("multi-shot input validation") {
  CHECK_THROWS_AS(lrt_threshold(ShotProbs(0.5, 0.1), 10.0), error);
  try {
    chernoff_s_opt(ShotProbs(0.5, 0.5));
    FAIL("expected ordering error");
  } catch (const error& e) {
    CHECK(e.code() == errc::ordering);
  }
  CHECK_THROWS_AS(exact_ln_error(ShotProbs(0.2, 0.8), 0), error);
  CHECK_THROWS_AS(mc_error(ShotProbs(0.2, 0.8), 10, 0, 1, 1), error);
}
