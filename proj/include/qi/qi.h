// SPDX-License-Identifier: Apache-2.0
//
// C interface for the qi library: finite-M performance of high-dimensional
// Bell-state quantum illumination, with Fock-space oracles and a Gaussian
// (two-mode squeezed vacuum) comparison baseline.
//
// All functions are pure: outputs depend only on the scalar inputs. Every
// function returns a qi_status; results are written through out-pointers and
// are valid only when QI_OK is returned. Log-domain quantities are natural
// logarithms of probabilities (<= 0, -inf allowed for exact zero).

#ifndef QI_QI_H
#define QI_QI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QI_API __declspec(dllexport)
#else
#define QI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qi_status {
  QI_OK = 0,            /* success */
  QI_ERR_DOMAIN = 1,    /* argument outside its mathematical domain */
  QI_ERR_RANGE = 2,     /* argument outside the supported numeric range */
  QI_ERR_ORDERING = 3,  /* requires p_f < p_d (no usable likelihood ratio) */
  QI_ERR_NO_ROOT = 4,   /* solver bracket has no sign change / no solution */
  QI_ERR_DIMENSION = 5, /* mode-label / basis dimension mismatch or overflow */
  QI_ERR_NUMERIC = 6,   /* internal loss of numerical validity */
  QI_ERR_INVALID = 7    /* null pointer or otherwise malformed call */
} qi_status;

/* Human-readable name for a status code (static storage, never NULL). */
QI_API const char* qi_status_str(qi_status st);

/* Library version string "major.minor.patch" (static storage). */
QI_API const char* qi_version(void);

/* ------------------------------------------------------------------ */
/* Asymptotic bounds and baselines (per-pulse kappa in (0,1],          */
/* background brightness n_b >= 0, transmitted photons n_t > 0).       */
/* ------------------------------------------------------------------ */

/* Nair-Gu lower bound: ln Pr(e) >= n_t * ln(1 - kappa/(n_b+1)) - ln 2,
 * evaluated in log domain (log1p); writes the right-hand side. */
QI_API qi_status qi_nair_gu_ln_error_lb(double kappa, double n_b, double n_t,
                                        double* ln_p);

/* Coherent-state Chernoff upper bound exponent:
 * ln Pr(e) <= -n_t * kappa (sqrt(n_b+1) - sqrt(n_b))^2 - ln 2. */
QI_API qi_status qi_cs_ln_error_ub(double kappa, double n_b, double n_t,
                                   double* ln_p);

/* Asymptotic (M -> infinity) Bell-state QI upper bound:
 * ln Pr(e) <= -n_t * kappa / (n_b + 1) - ln 2. */
QI_API qi_status qi_pannu_asymptotic_ln_ub(double kappa, double n_b,
                                           double n_t, double* ln_p);

/* Error-exponent advantage over coherent states in dB:
 * 10 log10( [1/(n_b+1)] / (sqrt(n_b+1)-sqrt(n_b))^2 ).  n_b > 0. */
QI_API qi_status qi_quantum_advantage_db(double n_b, double* db);

/* ------------------------------------------------------------------ */
/* Single-shot detection probabilities (finite M >= 2).                */
/* ------------------------------------------------------------------ */

QI_API qi_status qi_p_f_approx(double kappa, double n_b, double m,
                               double* p_f);
QI_API qi_status qi_p_d_approx(double kappa, double n_b, double m,
                               double* p_d);

/* First-order finite-M corrections Delta_F, Delta_D. */
QI_API qi_status qi_delta_f(double kappa, double n_b, double m,
                            double* delta_f);
QI_API qi_status qi_delta_d(double kappa, double n_b, double m,
                            double* delta_d);

/* Base and corrected pair in one call; any out-pointer may be NULL. */
QI_API qi_status qi_corrected_probs(double kappa, double n_b, double m,
                                    double* p_f, double* p_d,
                                    double* p_f_corrected,
                                    double* p_d_corrected, double* delta_f,
                                    double* delta_d);

/* Dimensionality threshold M_0 above which p_d - p_f grows with M. */
QI_API qi_status qi_m0_threshold(double kappa, double n_b, double* m0);

/* ------------------------------------------------------------------ */
/* Multi-shot discrimination from per-shot probabilities               */
/* (requires 0 < p_f < p_d < 1 where noted).                           */
/* ------------------------------------------------------------------ */

/* Likelihood-ratio-test count threshold gamma (real, not rounded). */
QI_API qi_status qi_lrt_threshold(double p_f, double p_d, double n_t,
                                  double* gamma);

/* Chernoff minimization over s in (0,1): optimal s and ln Q(s_opt).
 * The n_t-shot bound is ln Pr(e) <= n_t * ln_q - ln 2. */
QI_API qi_status qi_chernoff(double p_f, double p_d, double* s_opt,
                             double* ln_q);

/* Penalty factor (fraction of the asymptotic exponent attained at
 * dimensionality m): -ln Q(s_opt) * (n_b+1)/kappa. Requires m > M_0;
 * has_advantage is set to 1 when the finite-M exponent exceeds the
 * coherent-state exponent. */
QI_API qi_status qi_penalty(double kappa, double n_b, double m,
                            double* penalty, int* has_advantage);

/* Smallest m (by bisection on ln m over (1.001*M_0, 1e20)) whose penalty
 * meets `target` to 1e-6 relative. QI_ERR_NO_ROOT if unattainable. */
QI_API qi_status qi_solve_m_for_penalty(double kappa, double n_b,
                                        double target, double* m);

/* Exact LRT error probability, log domain:
 * ln{ [P(Bin(n_t,p_f) >= ceil(gamma)) + P(Bin(n_t,p_d) < ceil(gamma))]/2 }.
 * Ties (integer counts equal to the rounded threshold) decide target-present.
 */
QI_API qi_status qi_exact_ln_error(double p_f, double p_d, uint64_t n_t,
                                   double* ln_p);

/* Monte-Carlo LRT error estimate. Deterministic for a given seed regardless
 * of `threads` (counter-based per-trial random streams). std_err is the
 * binomial standard error sqrt(p(1-p)/trials). */
QI_API qi_status qi_mc_error(double p_f, double p_d, uint64_t n_t,
                             uint64_t trials, uint64_t seed, uint32_t threads,
                             double* p_err_hat, double* std_err);

/* ------------------------------------------------------------------ */
/* Fock-space oracle (exact reduced sums and brute force).             */
/* m must be an integer >= 2; rel_tol in (1e-14, 1e-4).                */
/* ------------------------------------------------------------------ */

QI_API qi_status qi_p_f_exact(double kappa, double n_b, double m,
                              double rel_tol, double* p_f);
QI_API qi_status qi_p_d_exact(double kappa, double n_b, double m,
                              double rel_tol, double* p_d);

/* Matrix element <n, idler m_index | rho_1 | n_prime, idler m_prime> of the
 * single-shot target-present conditional state, for occupation lists of
 * n_modes photon numbers per signal mode. */
QI_API qi_status qi_rho1_element(size_t m_index, size_t m_prime,
                                 const uint32_t* n, const uint32_t* n_prime,
                                 size_t n_modes, double kappa, double n_b,
                                 double* value);

typedef struct qi_brute_force_result {
  double p_f;                      /* tr(Pi_1 rho_0) within the cutoff */
  double p_d;                      /* tr(Pi_1 rho_1) within the cutoff */
  double tail_mass;                /* rho_1 weight excluded by the cutoff */
  double trace_rho1;               /* should be ~1 - O(tail_mass) */
  double min_eigenvalue;           /* most negative eigenvalue of rho_1 */
  double projector_residual;       /* max |(Pi_1^2 - Pi_1)_{ij}| */
  double phase_invariance_residual;/* max p-shift under random mode phases */
} qi_brute_force_result;

/* Dense construction of rho_0, rho_1 and the Bell-projector POVM on the
 * truncated Fock basis {|n|, total photons <= cutoff} x {idler mode}. */
QI_API qi_status qi_brute_force(double kappa, double n_b, uint32_t m,
                                uint32_t cutoff, qi_brute_force_result* out);

/* ------------------------------------------------------------------ */
/* Gaussian (TMSV) comparison baseline; n_s > 0 signal brightness.     */
/* ------------------------------------------------------------------ */

/* Covariance matrices (xpxp convention, vacuum = identity) of the return
 * (+) idler pair under H0/H1, written row-major into v0[16], v1[16]. */
QI_API qi_status qi_gaussian_covariances(double kappa, double n_b, double n_s,
                                         double v0[16], double v1[16]);

/* ln of the Gaussian s-overlap tr(rho_0^s rho_1^(1-s)), s in (0,1). */
QI_API qi_status qi_gaussian_ln_overlap(double kappa, double n_b, double n_s,
                                        double s, double* ln_q);

/* Per-mode-pair quantum Chernoff exponent xi = -min_s ln overlap, and the
 * minimizing s (golden-section, |ds| < 1e-10). */
QI_API qi_status qi_gaussian_qcb_exponent(double kappa, double n_b,
                                          double n_s, double* xi,
                                          double* s_opt);

/* Penalty relative to the Nair-Gu exponent: xi/n_s * (n_b+1)/kappa. */
QI_API qi_status qi_tan_penalty(double kappa, double n_b, double n_s,
                                double* penalty);

/* Signal brightness at which tan_penalty meets `target` (bisection on
 * ln n_s over (1e-9, 10)). QI_ERR_NO_ROOT if unattainable. */
QI_API qi_status qi_solve_ns_for_penalty(double kappa, double n_b,
                                         double target, double* n_s);

/* Chernoff upper bound for n_t transmitted photons split over n_t/n_s
 * mode pairs: ln Pr(e) <= -(n_t/n_s) * xi - ln 2. */
QI_API qi_status qi_tan_ln_error_ub(double kappa, double n_b, double n_s,
                                    double n_t, double* ln_p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QI_QI_H */
