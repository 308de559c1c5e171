// SPDX-License-Identifier: Apache-2.0
#include "qi/multi_shot.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "qi/bounds.hpp"
#include "qi/single_shot.hpp"

namespace qi {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double logsumexp2(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// ln(p_D/p_F) and ln((1-p_F)/(1-p_D)), both > 0 for ordered probs.
struct LogOdds {
  double a; // ln(p_D / p_F)
  double b; // ln((1-p_F) / (1-p_D))
};

LogOdds log_odds(const ShotProbs& probs) {
  probs.require_ordered();
  return {std::log(probs.p_d) - std::log(probs.p_f),
          std::log1p(-probs.p_f) - std::log1p(-probs.p_d)};
}

} // namespace

double lrt_threshold(const ShotProbs& probs, double n_t) {
  require(std::isfinite(n_t) && n_t > 0.0, errc::domain, "n_t must be > 0");
  const LogOdds lo = log_odds(probs);
  return n_t * lo.b / (lo.a + lo.b);
}

double chernoff_s_opt(const ShotProbs& probs) {
  const LogOdds lo = log_odds(probs);
  // Stationarity of Q(s): a p_F e^{s a} = b (1-p_F) e^{-s b}.
  const double s = (std::log(lo.b) - std::log(lo.a) + std::log1p(-probs.p_f) -
                    std::log(probs.p_f)) /
                   (lo.a + lo.b);
  // The stationary point is interior for ordered probabilities; clamp only
  // against round-off at extreme parameters.
  return std::clamp(s, 1e-15, 1.0 - 1e-15);
}

ChernoffResult chernoff_bound(const ShotProbs& probs) {
  const double s = chernoff_s_opt(probs);
  const double ln_q =
      logsumexp2(s * std::log(probs.p_d) + (1.0 - s) * std::log(probs.p_f),
                 s * std::log1p(-probs.p_d) + (1.0 - s) * std::log1p(-probs.p_f));
  return ChernoffResult{s, ln_q};
}

LogProb ChernoffResult::ln_bound(double n_t) const {
  require(std::isfinite(n_t) && n_t >= 0.0, errc::domain, "n_t must be >= 0");
  return LogProb{n_t * ln_q - kLn2};
}

PenaltyPoint penalty(const ScenarioParams& p) {
  const double m0 = m0_threshold(p.kappa, p.n_b);
  require(p.m > m0, errc::domain,
          "m must exceed the M_0 threshold for a usable detection gap");
  const ShotProbs probs{p_f_approx(p), p_d_approx(p)};
  const ChernoffResult ch = chernoff_bound(probs);
  const double pen = -ch.ln_q * (p.n_b + 1.0) / p.kappa;
  // Per-shot coherent-state exponent at one transmitted photon per shot.
  const double sq = std::sqrt(p.n_b + 1.0) + std::sqrt(p.n_b);
  const double cs_exponent = p.kappa / (sq * sq);
  return PenaltyPoint{p, pen, -ch.ln_q > cs_exponent};
}

double solve_m_for_penalty(double kappa, double n_b, double target) {
  require(std::isfinite(target) && target > 0.0 && target < 1.0, errc::domain,
          "target penalty must lie in (0, 1)");
  const double m0 = m0_threshold(kappa, n_b);
  double lo = std::log(1.001 * std::max(m0, 2.0));
  double hi = std::log(1e20);
  auto f = [&](double ln_m) {
    return penalty(ScenarioParams(kappa, n_b, std::exp(ln_m))).penalty -
           target;
  };
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  require(f_lo < 0.0 && f_hi > 0.0, errc::no_root,
          "penalty target not bracketed on (1.001 M_0, 1e20)");
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double m = std::exp(0.5 * (lo + hi));
  const double achieved = penalty(ScenarioParams(kappa, n_b, m)).penalty;
  require(std::abs(achieved - target) <= 1e-6 * target, errc::no_root,
          "bisection failed to meet the 1e-6 relative penalty tolerance");
  return m;
}

double ln_binomial_range(std::uint64_t n, double p, std::int64_t klo,
                         std::int64_t khi) {
  require(std::isfinite(p) && p > 0.0 && p < 1.0, errc::domain,
          "p must lie in (0, 1)");
  klo = std::max<std::int64_t>(klo, 0);
  khi = std::min<std::int64_t>(khi, static_cast<std::int64_t>(n));
  if (klo > khi) return -std::numeric_limits<double>::infinity();
  const double ln_p = std::log(p);
  const double ln_1mp = std::log1p(-p);
  auto ln_pmf = [&](std::int64_t k) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0) +
           static_cast<double>(k) * ln_p +
           static_cast<double>(n - k) * ln_1mp;
  };
  // The pmf is unimodal with mode floor((n+1)p); anchor the scaled linear
  // sum at the largest term inside [klo, khi].
  const auto mode = static_cast<std::int64_t>(
      std::floor((static_cast<double>(n) + 1.0) * p));
  const std::int64_t kmax = std::clamp(mode, klo, khi);
  const double ln_anchor = ln_pmf(kmax);
  if (ln_anchor == -std::numeric_limits<double>::infinity())
    return -std::numeric_limits<double>::infinity();
  const double odds = p / (1.0 - p);
  double sum = 1.0; // anchor term, scaled
  // Upward sweep: term(k+1)/term(k) = (n-k)/(k+1) * odds.
  double term = 1.0;
  for (std::int64_t k = kmax; k < khi; ++k) {
    term *= static_cast<double>(n - k) / (static_cast<double>(k) + 1.0) * odds;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  // Downward sweep: term(k-1)/term(k) = k / ((n-k+1) * odds).
  term = 1.0;
  for (std::int64_t k = kmax; k > klo; --k) {
    term *= static_cast<double>(k) /
            ((static_cast<double>(n - k) + 1.0) * odds);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return ln_anchor + std::log(sum);
}

LogProb exact_ln_error(const ShotProbs& probs, std::uint64_t n_t) {
  require(n_t >= 1, errc::domain, "n_t must be >= 1");
  const double gamma = lrt_threshold(probs, static_cast<double>(n_t));
  const auto k0 = static_cast<std::int64_t>(std::ceil(gamma));
  const auto n = static_cast<std::int64_t>(n_t);
  // Decide target-present iff D >= k0 (ties at an integral threshold go to
  // target-present).
  const double ln_fa =
      k0 <= 0 ? 0.0 : ln_binomial_range(n_t, probs.p_f, k0, n);
  const double ln_miss =
      k0 > n ? 0.0 : ln_binomial_range(n_t, probs.p_d, 0, k0 - 1);
  return LogProb{logsumexp2(ln_fa, ln_miss) - kLn2};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stateless uniform deviate in [0,1) keyed by (seed, hypothesis, trial,
// shot); trials are therefore independent of execution order.
double mc_uniform(std::uint64_t seed, std::uint64_t hyp, std::uint64_t trial,
                  std::uint64_t shot) {
  std::uint64_t x = splitmix64(seed ^ 0x8f1bbcdcbfa53e0bull * hyp);
  x = splitmix64(x ^ 0xd6e8feb86659fd93ull * trial);
  x = splitmix64(x ^ 0xa5a5a5a5a5a5a5a5ull * shot);
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

} // namespace

McEstimate mc_error(const ShotProbs& probs, std::uint64_t n_t,
                    std::uint64_t trials, std::uint64_t seed,
                    unsigned threads) {
  require(n_t >= 1, errc::domain, "n_t must be >= 1");
  require(trials >= 1, errc::domain, "trials must be >= 1");
  const double gamma = lrt_threshold(probs, static_cast<double>(n_t));
  const auto k0 = static_cast<std::int64_t>(std::ceil(gamma));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                       std::uint64_t* errors) {
    std::uint64_t errs = 0;
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      for (std::uint64_t hyp = 0; hyp < 2; ++hyp) {
        const double p = hyp == 0 ? probs.p_f : probs.p_d;
        std::int64_t count = 0;
        for (std::uint64_t shot = 0; shot < n_t; ++shot)
          count += mc_uniform(seed, hyp, trial, shot) < p;
        const bool say_present = count >= k0;
        errs += say_present != (hyp == 1);
      }
    }
    *errors = errs;
  };

  std::vector<std::uint64_t> partial(threads, 0);
  if (threads == 1) {
    run_range(0, trials, partial.data());
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, trials);
      pool.emplace_back(run_range, lo, hi, &partial[t]);
    }
    for (auto& th : pool) th.join();
  }
  std::uint64_t errors = 0;
  for (const auto e : partial) errors += e;

  const double p_hat =
      static_cast<double>(errors) / (2.0 * static_cast<double>(trials));
  const double std_err =
      std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
  return McEstimate{p_hat, std_err, trials, seed};
}

} // namespace qi
