// SPDX-License-Identifier: Apache-2.0
#include "qi/single_shot.hpp"

#include <algorithm>
#include <cmath>

namespace qi {

double p_f_approx(const ScenarioParams& p) {
  return p.n_b / (p.m * (p.n_b + 1.0) - 1.0);
}

double p_d_approx(const ScenarioParams& p) {
  return p.kappa / (p.n_b + 1.0) + p.n_b / (p.m * (p.n_b + 1.0));
}

double delta_f(const ScenarioParams& p) {
  const double d = p.m * (p.n_b + 1.0) - 1.0;
  return p.n_b * (p.n_b + 1.0) / (d * d);
}

double delta_d(const ScenarioParams& p) {
  const double d = p.m * (p.n_b + 1.0);
  return (p.n_b * (3.0 * p.kappa + p.n_b) +
          p.kappa * (p.m - 1.0) * p.n_b * p.n_b) /
         (d * d);
}

CorrectedShotProbs corrected_probs(const ScenarioParams& p) {
  const ShotProbs base{p_f_approx(p), p_d_approx(p)};
  const double df = delta_f(p);
  const double dd = delta_d(p);
  const ShotProbs corr{std::max(0.0, base.p_f - df),
                       std::max(0.0, base.p_d - dd)};
  return CorrectedShotProbs{base, corr, df, dd};
}

double m0_threshold(double kappa, double n_b) {
  require(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0, errc::domain,
          "kappa must lie in (0, 1]");
  require(std::isfinite(n_b) && n_b >= 0.0, errc::domain, "n_b must be >= 0");
  const double disc =
      std::sqrt(kappa * kappa + 4.0 * kappa * n_b * (n_b + 1.0));
  return (kappa + disc) / (2.0 * kappa * (n_b + 1.0));
}

} // namespace qi
