// SPDX-License-Identifier: Apache-2.0
#include "qi/bounds.hpp"

#include <cmath>

namespace qi {

namespace {

void check_bound_args(double kappa, double n_b, double n_t) {
  require(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0, errc::domain,
          "kappa must lie in (0, 1]");
  require(std::isfinite(n_b) && n_b >= 0.0, errc::domain, "n_b must be >= 0");
  require(std::isfinite(n_t) && n_t > 0.0, errc::domain, "n_t must be > 0");
}

} // namespace

LogProb nair_gu_ln_error_lb(double kappa, double n_b, double n_t) {
  check_bound_args(kappa, n_b, n_t);
  // kappa <= 1 < n_b + 1 would make the log argument 0 only at n_b = 0,
  // kappa = 1 (perfect transmission, no background): ln 0 = -inf is correct.
  const double x = kappa / (n_b + 1.0);
  return LogProb{n_t * std::log1p(-x) - std::log(2.0)};
}

LogProb cs_ln_error_ub(double kappa, double n_b, double n_t) {
  check_bound_args(kappa, n_b, n_t);
  // (sqrt(n_b+1) - sqrt(n_b))^2 = 1/(sqrt(n_b+1) + sqrt(n_b))^2, which is the
  // cancellation-free form for large n_b.
  const double s = std::sqrt(n_b + 1.0) + std::sqrt(n_b);
  return LogProb{-n_t * kappa / (s * s) - std::log(2.0)};
}

LogProb pannu_asymptotic_ln_ub(double kappa, double n_b, double n_t) {
  check_bound_args(kappa, n_b, n_t);
  return LogProb{-n_t * kappa / (n_b + 1.0) - std::log(2.0)};
}

double quantum_advantage_db(double n_b) {
  require(std::isfinite(n_b) && n_b > 0.0, errc::domain, "n_b must be > 0");
  const double s = std::sqrt(n_b + 1.0) + std::sqrt(n_b);
  // exponent ratio = (s^2) / (n_b + 1)
  return 10.0 * std::log10(s * s / (n_b + 1.0));
}

} // namespace qi
