// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "qi/domain.hpp"

namespace qi {

// Exact single-shot probabilities from the reduced Fock-space sums (mode
// symmetry collapses the M-mode traces to low-dimensional series over the
// occupation of the distinguished mode(s) and the total occupation of the
// rest, which is negative-binomially distributed). rel_tol in (1e-14, 1e-4)
// controls the analytic geometric tail bounds used for truncation; m must be
// an integer >= 2.
double p_f_exact(const ScenarioParams& p, double rel_tol);
double p_d_exact(const ScenarioParams& p, double rel_tol);

// Matrix element <n, idler m_index| rho_1 |n_prime, idler m_prime> of the
// target-present conditional return+idler state, for signal occupation lists
// n, n_prime of equal length (the number of modes, >= 2).
double rho1_element(std::size_t m_index, std::size_t m_prime,
                    std::span<const std::uint32_t> n,
                    std::span<const std::uint32_t> n_prime, double kappa,
                    double n_b);

struct OracleDiagnostics {
  double trace_rho1;                // 1 - O(tail_mass)
  double min_eigenvalue;            // most negative eigenvalue of rho_1
  double projector_residual;        // max |(Pi^2 - Pi)_{ij}|
  double phase_invariance_residual; // max probability shift under 8 random
                                    // joint phase rotations
};

struct BruteForceResult {
  ShotProbs probs;  // tr(Pi_1 rho_0), tr(Pi_1 rho_1) within the cutoff
  double tail_mass; // closed-form rho_1 weight excluded by the truncation
  OracleDiagnostics diag;
};

// Dense construction of rho_0, rho_1 and the Bell-projector POVM on the
// truncated basis {occupations with total <= cutoff} x {idler mode}. The
// projector keeps |psi_N> with |N| <= cutoff - 1 so it closes within the
// basis. Total dimension is capped at 4096 (errc::dimension beyond that).
BruteForceResult brute_force(const ScenarioParams& p, unsigned cutoff);

// Helpers exposed for tests: log pmf of the total occupation of `modes`
// independent thermal modes (negative binomial), and its upper tail mass
// P(total > cutoff).
double nb_log_pmf(std::uint64_t k, std::uint64_t modes, double n_b);
double nb_tail_mass(std::uint64_t modes, std::uint64_t cutoff, double n_b);

} // namespace qi
