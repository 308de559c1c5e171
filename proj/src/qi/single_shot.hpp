// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qi/domain.hpp"

namespace qi {

// Leading-order single-shot false-alarm probability:
//   p_F = n_b / (m (n_b + 1) - 1).
double p_f_approx(const ScenarioParams& p);

// Leading-order single-shot detection probability:
//   p_D = kappa/(n_b + 1) + n_b/(m (n_b + 1)).
double p_d_approx(const ScenarioParams& p);

// First-order finite-M corrections (stochastic-Taylor variance terms):
//   Delta_F = n_b (n_b + 1) / [m (n_b + 1) - 1]^2
//   Delta_D = [n_b (3 kappa + n_b) + kappa (m - 1) n_b^2] / [m (n_b + 1)]^2
double delta_f(const ScenarioParams& p);
double delta_d(const ScenarioParams& p);

struct CorrectedShotProbs {
  ShotProbs base;      // leading-order pair
  ShotProbs corrected; // p_F - Delta_F, p_D - Delta_D (clamped at 0)
  double delta_f;
  double delta_d;
};

CorrectedShotProbs corrected_probs(const ScenarioParams& p);

// Dimensionality threshold above which p_D - p_F increases with m:
//   M_0 = [kappa + sqrt(kappa^2 + 4 kappa n_b (n_b + 1))] / [2 kappa (n_b+1)].
double m0_threshold(double kappa, double n_b);

} // namespace qi
