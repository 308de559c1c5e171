// SPDX-License-Identifier: Apache-2.0
#include "qi/qi.h"

#include <exception>

#include "qi/bounds.hpp"
#include "qi/domain.hpp"
#include "qi/fock_oracle.hpp"
#include "qi/gaussian.hpp"
#include "qi/multi_shot.hpp"
#include "qi/single_shot.hpp"

namespace {

qi_status to_status(qi::errc code) {
  switch (code) {
    case qi::errc::domain: return QI_ERR_DOMAIN;
    case qi::errc::range: return QI_ERR_RANGE;
    case qi::errc::ordering: return QI_ERR_ORDERING;
    case qi::errc::no_root: return QI_ERR_NO_ROOT;
    case qi::errc::dimension: return QI_ERR_DIMENSION;
    case qi::errc::numeric: return QI_ERR_NUMERIC;
    case qi::errc::invalid: return QI_ERR_INVALID;
  }
  return QI_ERR_INVALID;
}

// Runs `fn` and translates exceptions into status codes; `fn` writes its
// outputs only on success.
template <typename F>
qi_status guarded(F&& fn) noexcept {
  try {
    fn();
    return QI_OK;
  } catch (const qi::error& e) {
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    return QI_ERR_DIMENSION;
  } catch (const std::exception&) {
    return QI_ERR_INVALID;
  }
}

} // namespace

extern "C" {

const char* qi_status_str(qi_status st) {
  switch (st) {
    case QI_OK: return "ok";
    case QI_ERR_DOMAIN: return "domain error";
    case QI_ERR_RANGE: return "range error";
    case QI_ERR_ORDERING: return "ordering error (requires p_f < p_d)";
    case QI_ERR_NO_ROOT: return "no root in solver bracket";
    case QI_ERR_DIMENSION: return "dimension error";
    case QI_ERR_NUMERIC: return "numeric error";
    case QI_ERR_INVALID: return "invalid call";
  }
  return "unknown status";
}

const char* qi_version(void) { return "1.0.0"; }

qi_status qi_nair_gu_ln_error_lb(double kappa, double n_b, double n_t,
                                 double* ln_p) {
  if (!ln_p) return QI_ERR_INVALID;
  return guarded([&] { *ln_p = qi::nair_gu_ln_error_lb(kappa, n_b, n_t).ln_p; });
}

qi_status qi_cs_ln_error_ub(double kappa, double n_b, double n_t,
                            double* ln_p) {
  if (!ln_p) return QI_ERR_INVALID;
  return guarded([&] { *ln_p = qi::cs_ln_error_ub(kappa, n_b, n_t).ln_p; });
}

qi_status qi_pannu_asymptotic_ln_ub(double kappa, double n_b, double n_t,
                                    double* ln_p) {
  if (!ln_p) return QI_ERR_INVALID;
  return guarded(
      [&] { *ln_p = qi::pannu_asymptotic_ln_ub(kappa, n_b, n_t).ln_p; });
}

qi_status qi_quantum_advantage_db(double n_b, double* db) {
  if (!db) return QI_ERR_INVALID;
  return guarded([&] { *db = qi::quantum_advantage_db(n_b); });
}

qi_status qi_p_f_approx(double kappa, double n_b, double m, double* p_f) {
  if (!p_f) return QI_ERR_INVALID;
  return guarded(
      [&] { *p_f = qi::p_f_approx(qi::ScenarioParams(kappa, n_b, m)); });
}

qi_status qi_p_d_approx(double kappa, double n_b, double m, double* p_d) {
  if (!p_d) return QI_ERR_INVALID;
  return guarded(
      [&] { *p_d = qi::p_d_approx(qi::ScenarioParams(kappa, n_b, m)); });
}

qi_status qi_delta_f(double kappa, double n_b, double m, double* delta_f) {
  if (!delta_f) return QI_ERR_INVALID;
  return guarded(
      [&] { *delta_f = qi::delta_f(qi::ScenarioParams(kappa, n_b, m)); });
}

qi_status qi_delta_d(double kappa, double n_b, double m, double* delta_d) {
  if (!delta_d) return QI_ERR_INVALID;
  return guarded(
      [&] { *delta_d = qi::delta_d(qi::ScenarioParams(kappa, n_b, m)); });
}

qi_status qi_corrected_probs(double kappa, double n_b, double m, double* p_f,
                             double* p_d, double* p_f_corrected,
                             double* p_d_corrected, double* delta_f,
                             double* delta_d) {
  return guarded([&] {
    const auto r = qi::corrected_probs(qi::ScenarioParams(kappa, n_b, m));
    if (p_f) *p_f = r.base.p_f;
    if (p_d) *p_d = r.base.p_d;
    if (p_f_corrected) *p_f_corrected = r.corrected.p_f;
    if (p_d_corrected) *p_d_corrected = r.corrected.p_d;
    if (delta_f) *delta_f = r.delta_f;
    if (delta_d) *delta_d = r.delta_d;
  });
}

qi_status qi_m0_threshold(double kappa, double n_b, double* m0) {
  if (!m0) return QI_ERR_INVALID;
  return guarded([&] { *m0 = qi::m0_threshold(kappa, n_b); });
}

qi_status qi_lrt_threshold(double p_f, double p_d, double n_t,
                           double* gamma) {
  if (!gamma) return QI_ERR_INVALID;
  return guarded(
      [&] { *gamma = qi::lrt_threshold(qi::ShotProbs(p_f, p_d), n_t); });
}

qi_status qi_chernoff(double p_f, double p_d, double* s_opt, double* ln_q) {
  return guarded([&] {
    const auto r = qi::chernoff_bound(qi::ShotProbs(p_f, p_d));
    if (s_opt) *s_opt = r.s_opt;
    if (ln_q) *ln_q = r.ln_q;
  });
}

qi_status qi_penalty(double kappa, double n_b, double m, double* penalty,
                     int* has_advantage) {
  return guarded([&] {
    const auto r = qi::penalty(qi::ScenarioParams(kappa, n_b, m));
    if (penalty) *penalty = r.penalty;
    if (has_advantage) *has_advantage = r.has_advantage_vs_cs ? 1 : 0;
  });
}

qi_status qi_solve_m_for_penalty(double kappa, double n_b, double target,
                                 double* m) {
  if (!m) return QI_ERR_INVALID;
  return guarded([&] { *m = qi::solve_m_for_penalty(kappa, n_b, target); });
}

qi_status qi_exact_ln_error(double p_f, double p_d, uint64_t n_t,
                            double* ln_p) {
  if (!ln_p) return QI_ERR_INVALID;
  return guarded(
      [&] { *ln_p = qi::exact_ln_error(qi::ShotProbs(p_f, p_d), n_t).ln_p; });
}

qi_status qi_mc_error(double p_f, double p_d, uint64_t n_t, uint64_t trials,
                      uint64_t seed, uint32_t threads, double* p_err_hat,
                      double* std_err) {
  return guarded([&] {
    const auto r =
        qi::mc_error(qi::ShotProbs(p_f, p_d), n_t, trials, seed, threads);
    if (p_err_hat) *p_err_hat = r.p_err_hat;
    if (std_err) *std_err = r.std_err;
  });
}

qi_status qi_p_f_exact(double kappa, double n_b, double m, double rel_tol,
                       double* p_f) {
  if (!p_f) return QI_ERR_INVALID;
  return guarded([&] {
    *p_f = qi::p_f_exact(qi::ScenarioParams(kappa, n_b, m), rel_tol);
  });
}

qi_status qi_p_d_exact(double kappa, double n_b, double m, double rel_tol,
                       double* p_d) {
  if (!p_d) return QI_ERR_INVALID;
  return guarded([&] {
    *p_d = qi::p_d_exact(qi::ScenarioParams(kappa, n_b, m), rel_tol);
  });
}

qi_status qi_rho1_element(size_t m_index, size_t m_prime, const uint32_t* n,
                          const uint32_t* n_prime, size_t n_modes,
                          double kappa, double n_b, double* value) {
  if (!value || !n || !n_prime) return QI_ERR_INVALID;
  return guarded([&] {
    *value = qi::rho1_element(m_index, m_prime, {n, n_modes},
                              {n_prime, n_modes}, kappa, n_b);
  });
}

qi_status qi_brute_force(double kappa, double n_b, uint32_t m,
                         uint32_t cutoff, qi_brute_force_result* out) {
  if (!out) return QI_ERR_INVALID;
  return guarded([&] {
    const auto r = qi::brute_force(
        qi::ScenarioParams(kappa, n_b, static_cast<double>(m)), cutoff);
    out->p_f = r.probs.p_f;
    out->p_d = r.probs.p_d;
    out->tail_mass = r.tail_mass;
    out->trace_rho1 = r.diag.trace_rho1;
    out->min_eigenvalue = r.diag.min_eigenvalue;
    out->projector_residual = r.diag.projector_residual;
    out->phase_invariance_residual = r.diag.phase_invariance_residual;
  });
}

qi_status qi_gaussian_covariances(double kappa, double n_b, double n_s,
                                  double v0[16], double v1[16]) {
  if (!v0 || !v1) return QI_ERR_INVALID;
  return guarded([&] {
    const auto cp =
        qi::build_covariances(qi::GaussianScenario(kappa, n_b, n_s));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        v0[4 * r + c] = cp.v0(r, c);
        v1[4 * r + c] = cp.v1(r, c);
      }
  });
}

qi_status qi_gaussian_ln_overlap(double kappa, double n_b, double n_s,
                                 double s, double* ln_q) {
  if (!ln_q) return QI_ERR_INVALID;
  return guarded([&] {
    *ln_q = qi::gaussian_ln_overlap(qi::GaussianScenario(kappa, n_b, n_s), s);
  });
}

qi_status qi_gaussian_qcb_exponent(double kappa, double n_b, double n_s,
                                   double* xi, double* s_opt) {
  return guarded([&] {
    const auto r =
        qi::gaussian_qcb_exponent(qi::GaussianScenario(kappa, n_b, n_s));
    if (xi) *xi = r.xi;
    if (s_opt) *s_opt = r.s_opt;
  });
}

qi_status qi_tan_penalty(double kappa, double n_b, double n_s,
                         double* penalty) {
  if (!penalty) return QI_ERR_INVALID;
  return guarded([&] {
    *penalty = qi::tan_penalty(qi::GaussianScenario(kappa, n_b, n_s));
  });
}

qi_status qi_solve_ns_for_penalty(double kappa, double n_b, double target,
                                  double* n_s) {
  if (!n_s) return QI_ERR_INVALID;
  return guarded(
      [&] { *n_s = qi::solve_ns_for_penalty(kappa, n_b, target); });
}

qi_status qi_tan_ln_error_ub(double kappa, double n_b, double n_s, double n_t,
                             double* ln_p) {
  if (!ln_p) return QI_ERR_INVALID;
  return guarded([&] {
    *ln_p =
        qi::tan_ln_error_ub(qi::GaussianScenario(kappa, n_b, n_s), n_t).ln_p;
  });
}

} // extern "C"
