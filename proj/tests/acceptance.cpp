// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion. With no arguments all
// ten criteria run; an integer argument runs just that criterion. Exit code
// is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "qi/bounds.hpp"
#include "qi/fock_oracle.hpp"
#include "qi/gaussian.hpp"
#include "qi/multi_shot.hpp"
#include "qi/single_shot.hpp"

using namespace qi;

namespace {

struct Report {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// 1. Published Table-of-M reproduction within 1%, under one second.
Report criterion1() {
  Report r;
  const auto t0 = std::chrono::steady_clock::now();
  const double t_high = std::pow(10.0, -0.1);
  const struct {
    double n_b, target, published;
  } rows[] = {{100.0, t_high, 2.27e13},
              {100.0, 0.25, 7.34e5},
              {1.0, t_high, 2.21e11},
              {1.0, 0.25, 7.33e3}};
  for (const auto& row : rows) {
    const double m = solve_m_for_penalty(0.001, row.n_b, row.target);
    const double rel = std::abs(m - row.published) / row.published;
    r.expect(rel <= 0.01, "n_b=" + num(row.n_b) + " target=" +
                              num(row.target) + " rel dev " + num(rel));
  }
  const double dt = seconds_since(t0);
  r.expect(dt < 1.0, "runtime " + num(dt) + " s >= 1 s");
  return r;
}

// 2. M_0 thresholds within 0.5%.
Report criterion2() {
  Report r;
  const double m0_mod = m0_threshold(0.001, 1.0);
  const double m0_high = m0_threshold(0.001, 100.0);
  r.expect(std::abs(m0_mod - 22.6) / 22.6 <= 0.005,
           "m0(0.001,1)=" + num(m0_mod));
  r.expect(std::abs(m0_high - 31.5) / 31.5 <= 0.005,
           "m0(0.001,100)=" + num(m0_high));
  return r;
}

// 3. Gaussian-baseline anchors within 0.5%, and the vanishing-brightness
// penalty limit within 1% of 1 at n_s = 1e-6.
Report criterion3() {
  Report r;
  const double t_high = std::pow(10.0, -0.1);
  const double ns_high = solve_ns_for_penalty(0.001, 100.0, t_high);
  r.expect(std::abs(ns_high - 0.01523) / 0.01523 <= 0.005,
           "solve_ns(0.001,100)=" + num(ns_high) + " vs 0.01523");
  const double ns_mod = solve_ns_for_penalty(0.001, 1.0, t_high);
  r.expect(std::abs(ns_mod - 0.01421) / 0.01421 <= 0.005,
           "solve_ns(0.001,1)=" + num(ns_mod) + " vs 0.01421");
  for (const double n_b : {1.0, 100.0}) {
    const double pen = tan_penalty(GaussianScenario(0.001, n_b, 1e-6));
    r.expect(std::abs(pen - 1.0) <= 0.01,
             "limit penalty(n_b=" + num(n_b) + ")=" + num(pen));
  }
  return r;
}

// 4. Quantum-advantage landmarks, +-0.05 dB.
Report criterion4() {
  Report r;
  const double db_high = quantum_advantage_db(100.0);
  const double db_mod = quantum_advantage_db(1.0);
  r.expect(std::abs(db_high - 5.99) <= 0.05, "db(100)=" + num(db_high));
  r.expect(std::abs(db_mod - 4.64) <= 0.05, "db(1)=" + num(db_mod));
  return r;
}

// 5. Oracle bands at (0.01, 1, 200) and corrected-closer, under ten seconds.
Report criterion5() {
  Report r;
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioParams p(0.01, 1.0, 200.0);
  const double rel_tol = 1e-10;
  const double pf_e = p_f_exact(p, rel_tol);
  const double pd_e = p_d_exact(p, rel_tol);
  const auto c = corrected_probs(p);
  r.expect(std::abs(pf_e - c.base.p_f) <= 2.0 * c.delta_f,
           "|p_f_exact - p_f_approx| = " + num(std::abs(pf_e - c.base.p_f)) +
               " > 2 delta_f = " + num(2.0 * c.delta_f));
  r.expect(std::abs(pd_e - c.base.p_d) <= 2.0 * c.delta_d,
           "|p_d_exact - p_d_approx| = " + num(std::abs(pd_e - c.base.p_d)) +
               " > 2 delta_d = " + num(2.0 * c.delta_d));
  r.expect(std::abs(c.corrected.p_f - pf_e) < std::abs(c.base.p_f - pf_e),
           "corrected p_f error " + num(std::abs(c.corrected.p_f - pf_e)) +
               " not closer than base " + num(std::abs(c.base.p_f - pf_e)));
  r.expect(std::abs(c.corrected.p_d - pd_e) < std::abs(c.base.p_d - pd_e),
           "corrected p_d error " + num(std::abs(c.corrected.p_d - pd_e)) +
               " not closer than base " + num(std::abs(c.base.p_d - pd_e)));
  const double dt = seconds_since(t0);
  r.expect(dt < 10.0, "runtime " + num(dt) + " s >= 10 s");
  return r;
}

// 6. Brute force vs reduced sums at (M=2, n_b=0.2, kappa=0.1, cutoff=8).
Report criterion6() {
  Report r;
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioParams p(0.1, 0.2, 2.0);
  const auto bf = brute_force(p, 8);
  const double rel_tol = 1e-10;
  const double tol = 1e-4 + bf.tail_mass;
  r.expect(std::abs(bf.probs.p_f - p_f_exact(p, rel_tol)) <= tol,
           "p_f mismatch " + num(std::abs(bf.probs.p_f - p_f_exact(p, rel_tol))));
  r.expect(std::abs(bf.probs.p_d - p_d_exact(p, rel_tol)) <= tol,
           "p_d mismatch " + num(std::abs(bf.probs.p_d - p_d_exact(p, rel_tol))));
  r.expect(bf.diag.trace_rho1 >= 1.0 - 2.0 * bf.tail_mass &&
               bf.diag.trace_rho1 <= 1.0 + 1e-12,
           "trace " + num(bf.diag.trace_rho1) + " tail " + num(bf.tail_mass));
  r.expect(bf.diag.min_eigenvalue >= -1e-10,
           "min eigenvalue " + num(bf.diag.min_eigenvalue));
  r.expect(bf.diag.projector_residual < 1e-10,
           "projector residual " + num(bf.diag.projector_residual));
  r.expect(bf.diag.phase_invariance_residual < 1e-12,
           "phase residual " + num(bf.diag.phase_invariance_residual));
  const double dt = seconds_since(t0);
  r.expect(dt < 60.0, "runtime " + num(dt) + " s >= 60 s");
  return r;
}

// 7. Chernoff bound dominates the exact error; closed-form optimizer matches
// a numeric argmin to 1e-6.
Report criterion7() {
  Report r;
  // Numeric argmin oracle: Q(s) is strictly convex, so the minimizer is the
  // zero of Q'(s). Bisection on the derivative sign in extended precision
  // resolves it even where the plateau is flatter than double epsilon.
  auto numeric_argmin = [](const ShotProbs& pr) {
    const long double pd = pr.p_d, pf = pr.p_f;
    auto dq_sign = [&](long double s) {
      const long double t1 = std::pow(pd, s) * std::pow(pf, 1.0L - s) *
                             std::log(pd / pf);
      const long double t2 = std::pow(1.0L - pd, s) *
                             std::pow(1.0L - pf, 1.0L - s) *
                             std::log((1.0L - pd) / (1.0L - pf));
      return t1 + t2;
    };
    long double a = 1e-12L, b = 1.0L - 1e-12L;
    for (int it = 0; it < 100; ++it) {
      const long double mid = 0.5L * (a + b);
      (dq_sign(mid) < 0.0L ? a : b) = mid;
    }
    return static_cast<double>(0.5L * (a + b));
  };
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> nt_dist(1, 500);
  int dominance_fail = 0, argmin_fail = 0;
  for (int i = 0; i < 200; ++i) {
    const double p_f = 1e-6 + (0.98 - 1e-6) * uni(rng);
    const double p_d =
        std::min(0.999999, p_f + (1.0 - p_f) * std::max(1e-6, uni(rng)));
    const ShotProbs pr(p_f, p_d);
    const std::uint64_t n_t = nt_dist(rng);
    const auto ch = chernoff_bound(pr);
    if (exact_ln_error(pr, n_t).ln_p >
        ch.ln_bound(static_cast<double>(n_t)).ln_p + 1e-9)
      ++dominance_fail;
    if (std::abs(ch.s_opt - numeric_argmin(pr)) > 1e-6) ++argmin_fail;
  }
  r.expect(dominance_fail == 0,
           num(dominance_fail) + "/200 random tuples violate dominance");
  r.expect(argmin_fail == 0,
           num(argmin_fail) + "/200 tuples off the numeric argmin");
  // Published operating points at N_T in {1e3, 1e5}.
  const double t_high = std::pow(10.0, -0.1);
  for (const double n_b : {1.0, 100.0})
    for (const double target : {t_high, 0.25}) {
      const double m = solve_m_for_penalty(0.001, n_b, target);
      const ScenarioParams p(0.001, n_b, m);
      const ShotProbs pr(p_f_approx(p), p_d_approx(p));
      const auto ch = chernoff_bound(pr);
      for (const std::uint64_t n_t : {1000ull, 100000ull})
        r.expect(exact_ln_error(pr, n_t).ln_p <=
                     ch.ln_bound(static_cast<double>(n_t)).ln_p + 1e-9,
                 "operating point n_b=" + num(n_b) + " violates dominance");
    }
  return r;
}

// 8. Monte Carlo accuracy and bit-level reproducibility.
Report criterion8() {
  Report r;
  const ScenarioParams p(0.1, 1.0, 500.0);
  const ShotProbs pr(p_f_approx(p), p_d_approx(p));
  const std::uint64_t n_t = 200, trials = 100000, seed = 20260826;
  const double exact = exact_ln_error(pr, n_t).prob();
  const auto est = mc_error(pr, n_t, trials, seed, 1);
  r.expect(std::abs(est.p_err_hat - exact) <= 3.0 * est.std_err,
           "mc " + num(est.p_err_hat) + " vs exact " + num(exact) +
               " (3 sigma = " + num(3.0 * est.std_err) + ")");
  const auto est_rerun = mc_error(pr, n_t, trials, seed, 1);
  const auto est_mt = mc_error(pr, n_t, trials, seed, 4);
  r.expect(est.p_err_hat == est_rerun.p_err_hat &&
               est.std_err == est_rerun.std_err,
           "repeat run differs");
  r.expect(est.p_err_hat == est_mt.p_err_hat &&
               est.std_err == est_mt.std_err,
           "thread count changes the estimate");
  return r;
}

// 9. Dimensionality ratios across Pr(e) in [1e-6, 1e-1].
Report criterion9() {
  Report r;
  const double t_high = std::pow(10.0, -0.1);
  for (const auto& [n_b, floor] :
       std::vector<std::pair<double, double>>{{100.0, 1e5}, {1.0, 1e4}}) {
    const double m_bell = solve_m_for_penalty(0.001, n_b, t_high);
    const double n_s = solve_ns_for_penalty(0.001, n_b, t_high);
    const double xi = gaussian_qcb_exponent(GaussianScenario(0.001, n_b, n_s)).xi;
    double worst = 1e300;
    for (int i = 0; i <= 20; ++i) {
      const double pr_e = std::pow(10.0, -6.0 + 0.25 * i);
      const double m_tmsv = -(std::log(pr_e) + std::log(2.0)) / xi;
      worst = std::min(worst, m_bell / m_tmsv);
    }
    r.expect(worst > floor, "n_b=" + num(n_b) + " min ratio " + num(worst) +
                                " <= " + num(floor));
  }
  return r;
}

// 10. Penalty monotonicity on a log grid and the near-limit value at 1e18.
Report criterion10() {
  Report r;
  for (const double n_b : {1.0, 100.0}) {
    double prev = -1.0;
    for (double lg = 2.0; lg <= 18.0; lg += 1.0) {
      const double pen =
          penalty(ScenarioParams(0.001, n_b, std::pow(10.0, lg))).penalty;
      r.expect(pen > prev, "non-monotone at n_b=" + num(n_b) +
                               ", M=1e" + num(lg));
      prev = pen;
    }
    r.expect(prev > 0.999, "penalty(0.001," + num(n_b) + ",1e18)=" +
                               num(prev) + " <= 0.999");
  }
  return r;
}

struct Criterion {
  int id;
  const char* summary;
  Report (*run)();
};

const Criterion kCriteria[] = {
    {1, "published M-value table within 1% in under 1 s", criterion1},
    {2, "M_0 thresholds 22.6 / 31.5 within 0.5%", criterion2},
    {3, "Gaussian operating-point anchors and n_s -> 0 limit", criterion3},
    {4, "quantum-advantage landmarks 5.99 / 4.64 dB", criterion4},
    {5, "exact-oracle bands and corrected-closer at (0.01, 1, 200)",
     criterion5},
    {6, "brute-force consistency and diagnostics at M = 2", criterion6},
    {7, "Chernoff dominance and argmin agreement on 200 tuples", criterion7},
    {8, "Monte Carlo within 3 sigma, bit-identical across threads",
     criterion8},
    {9, "dimensionality ratios above 1e5 / 1e4", criterion9},
    {10, "penalty monotone in M and above 0.999 at M = 1e18", criterion10},
};

} // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Report rep;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      rep.pass = false;
      rep.detail = std::string("exception: ") + e.what();
    }
    if (rep.pass) {
      std::printf("PASS criterion %d: %s\n", c.id, c.summary);
    } else {
      std::printf("FAIL criterion %d: %s [%s]\n", c.id, c.summary,
                  rep.detail.c_str());
      ++failures;
    }
  }
  return failures;
}
