// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "qi/domain.hpp"

namespace qi {

// Real-valued likelihood-ratio-test threshold on the detection count D over
// n_t shots (decide target-present when D >= ceil(gamma)):
//   gamma = n_t * ln[(1-p_F)/(1-p_D)] / ln[p_D(1-p_F) / (p_F(1-p_D))].
double lrt_threshold(const ShotProbs& probs, double n_t);

// Closed-form minimizer of Q(s) = p_D^s p_F^(1-s) + (1-p_D)^s (1-p_F)^(1-s)
// over s in (0,1).
double chernoff_s_opt(const ShotProbs& probs);

struct ChernoffResult {
  double s_opt;
  double ln_q; // ln Q(s_opt) < 0

  // n_t-shot Chernoff bound ln Pr(e) <= n_t ln Q - ln 2 (n_t >= 0 real).
  LogProb ln_bound(double n_t) const;
};

ChernoffResult chernoff_bound(const ShotProbs& probs);

struct PenaltyPoint {
  ScenarioParams params;
  double penalty;                // -ln Q(s_opt) (n_b+1)/kappa, in (0,1)
  bool has_advantage_vs_cs;      // per-shot exponent beats coherent states
};

// Fraction of the asymptotic (Nair-Gu-saturating) error exponent attained at
// finite dimensionality m, from the leading-order shot probabilities.
// Requires m > M_0 (otherwise errc::domain).
PenaltyPoint penalty(const ScenarioParams& p);

// Smallest m with penalty(kappa, n_b, m) = target, to 1e-6 relative, by
// bisection on ln m over (1.001 M_0, 1e20) after verifying a sign change.
double solve_m_for_penalty(double kappa, double n_b, double target);

// Exact LRT error probability (log domain) via binomial tails:
//   ln{ [P(Bin(n_t,p_F) >= ceil(gamma)) + P(Bin(n_t,p_D) < ceil(gamma))]/2 }.
LogProb exact_ln_error(const ShotProbs& probs, std::uint64_t n_t);

struct McEstimate {
  double p_err_hat;
  double std_err; // sqrt(p(1-p)/trials)
  std::uint64_t trials;
  std::uint64_t seed;
};

// Monte-Carlo estimate of the LRT error probability. Uses counter-based
// per-trial random streams so the result is bit-identical for a given seed
// regardless of the thread count (threads == 0 means hardware concurrency).
McEstimate mc_error(const ShotProbs& probs, std::uint64_t n_t,
                    std::uint64_t trials, std::uint64_t seed,
                    unsigned threads = 1);

// Log-domain binomial tail helpers (exposed for tests/oracles):
// ln P(klo <= Bin(n,p) <= khi); empty or fully-outside ranges give -inf.
double ln_binomial_range(std::uint64_t n, double p, std::int64_t klo,
                         std::int64_t khi);

} // namespace qi
