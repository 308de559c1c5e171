// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qi/domain.hpp"

namespace qi {

// Nair-Gu lower bound on the optimal error probability of any entanglement-
// assisted target-detection scheme transmitting n_t photons:
//   ln Pr(e) >= n_t * ln(1 - kappa/(n_b+1)) - ln 2.
LogProb nair_gu_ln_error_lb(double kappa, double n_b, double n_t);

// Coherent-state (classical benchmark) Chernoff upper bound:
//   ln Pr(e) <= -n_t * kappa * (sqrt(n_b+1) - sqrt(n_b))^2 - ln 2.
LogProb cs_ln_error_ub(double kappa, double n_b, double n_t);

// M -> infinity Bell-state upper bound, saturating Nair-Gu's exponent:
//   ln Pr(e) <= -n_t * kappa/(n_b+1) - ln 2.
LogProb pannu_asymptotic_ln_ub(double kappa, double n_b, double n_t);

// Error-exponent ratio over coherent states, in dB (n_b > 0):
//   10 log10( [1/(n_b+1)] / (sqrt(n_b+1) - sqrt(n_b))^2 ).
double quantum_advantage_db(double n_b);

} // namespace qi
