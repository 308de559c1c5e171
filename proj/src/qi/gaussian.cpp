// SPDX-License-Identifier: Apache-2.0
#include "qi/gaussian.hpp"

#include <cmath>

namespace qi {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// ln G_s(x) with G_s(x) = 2^s / [(x+1)^s - (x-1)^s], x >= 1.
double ln_g(double s, double x) {
  require(x >= 1.0 - 1e-9, errc::numeric,
          "symplectic eigenvalue below the physical floor");
  x = std::max(x, 1.0);
  const double y = (x - 1.0) / (x + 1.0); // in [0, 1)
  return s * kLn2 - s * std::log(x + 1.0) -
         std::log1p(-std::pow(y, s));
}

// Lambda_s(x) = [(x+1)^s + (x-1)^s] / [(x+1)^s - (x-1)^s].
double lambda_s(double s, double x) {
  x = std::max(x, 1.0);
  const double ys = std::pow((x - 1.0) / (x + 1.0), s);
  return (1.0 + ys) / (1.0 - ys);
}

// Standard-form parameters of v1 = [[A I, C Z], [C Z, B I]].
struct StandardForm {
  double a, b, c;
  double nu1, nu2;  // symplectic eigenvalues paired with blocks 1, 2
  double ch, sh;    // cosh r, sinh r of the diagonalizing two-mode squeezer
};

StandardForm analyze_v1(const GaussianScenario& g) {
  StandardForm f{};
  f.a = 2.0 * (g.kappa * g.n_s + g.n_b) + 1.0;
  f.b = 2.0 * g.n_s + 1.0;
  f.c = 2.0 * std::sqrt(g.kappa * g.n_s * (g.n_s + 1.0));
  const double disc = (f.a + f.b) * (f.a + f.b) - 4.0 * f.c * f.c;
  require(disc >= 0.0, errc::numeric, "covariance lost physicality");
  const double z = std::sqrt(disc);
  f.nu1 = 0.5 * (z + (f.a - f.b));
  f.nu2 = 0.5 * (z - (f.a - f.b));
  const double r = 0.5 * std::atanh(2.0 * f.c / (f.a + f.b));
  f.ch = std::cosh(r);
  f.sh = std::sinh(r);
  return f;
}

Eigen::Matrix4d squeezer_recombine(const StandardForm& f, double l1,
                                   double l2) {
  // S [l1 I (+) l2 I] S^T with S = [[ch I, sh Z], [sh Z, ch I]].
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  const double c2 = f.ch * f.ch;
  const double s2 = f.sh * f.sh;
  const double cs = f.ch * f.sh;
  v(0, 0) = v(1, 1) = c2 * l1 + s2 * l2;
  v(2, 2) = v(3, 3) = s2 * l1 + c2 * l2;
  const double off = cs * (l1 + l2);
  v(0, 2) = v(2, 0) = off;
  v(1, 3) = v(3, 1) = -off;
  return v;
}

} // namespace

CovariancePair build_covariances(const GaussianScenario& g) {
  CovariancePair cp;
  cp.v0 = Eigen::Matrix4d::Zero();
  cp.v0(0, 0) = cp.v0(1, 1) = 2.0 * g.n_b + 1.0;
  cp.v0(2, 2) = cp.v0(3, 3) = 2.0 * g.n_s + 1.0;
  const StandardForm f = analyze_v1(g);
  cp.v1 = Eigen::Matrix4d::Zero();
  cp.v1(0, 0) = cp.v1(1, 1) = f.a;
  cp.v1(2, 2) = cp.v1(3, 3) = f.b;
  cp.v1(0, 2) = cp.v1(2, 0) = f.c;
  cp.v1(1, 3) = cp.v1(3, 1) = -f.c;
  return cp;
}

double gaussian_ln_overlap(const GaussianScenario& g, double s) {
  require(std::isfinite(s) && s > 0.0 && s < 1.0, errc::domain,
          "s must lie in (0, 1)");
  const double t = 1.0 - s;
  const double nu0_ret = 2.0 * g.n_b + 1.0;
  const double nu0_idl = 2.0 * g.n_s + 1.0;
  const StandardForm f = analyze_v1(g);

  // V0(s) is already diagonal; V1(t) recombines through the squeezer.
  Eigen::Matrix4d sigma =
      squeezer_recombine(f, lambda_s(t, f.nu1), lambda_s(t, f.nu2));
  sigma(0, 0) += lambda_s(s, nu0_ret);
  sigma(1, 1) += lambda_s(s, nu0_ret);
  sigma(2, 2) += lambda_s(s, nu0_idl);
  sigma(3, 3) += lambda_s(s, nu0_idl);

  const double det = sigma.determinant();
  require(det > 0.0, errc::numeric, "overlap determinant not positive");
  return 2.0 * kLn2 + ln_g(s, nu0_ret) + ln_g(s, nu0_idl) +
         ln_g(t, f.nu1) + ln_g(t, f.nu2) - 0.5 * std::log(det);
}

QcbResult gaussian_qcb_exponent(const GaussianScenario& g) {
  // Golden-section minimization of ln overlap on (0, 1).
  const double invphi = 0.6180339887498949;
  double a = 1e-9;
  double b = 1.0 - 1e-9;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = gaussian_ln_overlap(g, x1);
  double f2 = gaussian_ln_overlap(g, x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = gaussian_ln_overlap(g, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = gaussian_ln_overlap(g, x2);
    }
  }
  const double s = 0.5 * (a + b);
  return QcbResult{-gaussian_ln_overlap(g, s), s};
}

double tan_penalty(const GaussianScenario& g) {
  return gaussian_qcb_exponent(g).xi / g.n_s * (g.n_b + 1.0) / g.kappa;
}

double solve_ns_for_penalty(double kappa, double n_b, double target) {
  require(std::isfinite(target) && target > 0.0 && target < 1.0, errc::domain,
          "target penalty must lie in (0, 1)");
  double lo = std::log(1e-9);
  double hi = std::log(10.0);
  auto f = [&](double ln_ns) {
    return tan_penalty(GaussianScenario(kappa, n_b, std::exp(ln_ns))) -
           target;
  };
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  require(f_lo * f_hi < 0.0, errc::no_root,
          "penalty target not bracketed on n_s in (1e-9, 10)");
  const bool rising = f_hi > 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == rising)
      lo = mid;
    else
      hi = mid;
  }
  const double n_s = std::exp(0.5 * (lo + hi));
  const double achieved = tan_penalty(GaussianScenario(kappa, n_b, n_s));
  require(std::abs(achieved - target) <= 1e-6 * target, errc::no_root,
          "bisection failed to meet the 1e-6 relative penalty tolerance");
  return n_s;
}

LogProb tan_ln_error_ub(const GaussianScenario& g, double n_t) {
  require(std::isfinite(n_t) && n_t >= 0.0, errc::domain, "n_t must be >= 0");
  return LogProb{-(n_t / g.n_s) * gaussian_qcb_exponent(g).xi - kLn2};
}

} // namespace qi
