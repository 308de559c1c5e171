// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qi/domain.hpp"

namespace qi {

// Two-mode-squeezed-vacuum (TMSV) illumination baseline: per-mode-pair
// signal brightness n_s, channel transmissivity kappa, background n_b.
struct GaussianScenario {
  double kappa;
  double n_b;
  double n_s;

  GaussianScenario(double kappa_, double n_b_, double n_s_)
      : kappa(kappa_), n_b(n_b_), n_s(n_s_) {
    require(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0, errc::domain,
            "kappa must lie in (0, 1]");
    require(std::isfinite(n_b) && n_b >= 0.0, errc::domain,
            "n_b must be >= 0");
    require(std::isfinite(n_s) && n_s > 0.0, errc::domain, "n_s must be > 0");
  }
};

struct CovariancePair {
  Eigen::Matrix4d v0; // target absent: thermal return x idler retention
  Eigen::Matrix4d v1; // target present: attenuated TMSV in background
};

// Covariance matrices in the xpxp convention with vacuum = identity
// (variance 2N+1), mode order (return, idler).
CovariancePair build_covariances(const GaussianScenario& g);

// ln tr(rho_0^s rho_1^(1-s)) for one mode pair, s in (0,1), via the Gaussian
// quantum Chernoff formula (symplectic spectra + squeezer-structured
// covariance recombination).
double gaussian_ln_overlap(const GaussianScenario& g, double s);

struct QcbResult {
  double xi;    // -min_s ln overlap > 0
  double s_opt; // minimizing s
};

// Golden-section minimization of the s-overlap to |ds| < 1e-10.
QcbResult gaussian_qcb_exponent(const GaussianScenario& g);

// Fraction of the Nair-Gu exponent attained per transmitted photon:
//   xi / n_s * (n_b+1) / kappa.
double tan_penalty(const GaussianScenario& g);

// Signal brightness at which tan_penalty meets `target`, by bisection on
// ln n_s over (1e-9, 10) after verifying a sign change.
double solve_ns_for_penalty(double kappa, double n_b, double target);

// Multi-copy Chernoff bound with n_t transmitted photons over n_t/n_s mode
// pairs: ln Pr(e) <= -(n_t/n_s) xi - ln 2.
LogProb tan_ln_error_ub(const GaussianScenario& g, double n_t);

} // namespace qi
