// SPDX-License-Identifier: Apache-2.0
#include "qi/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_exact_args(const ScenarioParams& p, double rel_tol) {
  require(p.m >= 2.0 && p.m == std::floor(p.m) && p.m <= 1e9, errc::domain,
          "m must be an integer >= 2");
  require(std::isfinite(rel_tol) && rel_tol > 1e-14 && rel_tol < 1e-4,
          errc::range, "rel_tol must lie in (1e-14, 1e-4)");
}

// Thermal weight per mode: th(x) = n_b^x / (n_b+1)^(x+1).
double thermal_pmf(std::uint64_t x, double n_b) {
  if (n_b == 0.0) return x == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(x) * std::log(n_b) -
                  (static_cast<double>(x) + 1.0) * std::log1p(n_b));
}

// Expectation E[f(k)] over k ~ NegBin(r modes, thermal brightness n_b) for a
// positive f that is non-increasing in k and bounded by f(0). A window is
// grown outward from the mode of the weight; the geometric weight-ratio
// bounds give rigorous truncation tails.
double negbin_expectation(std::uint64_t r, double n_b,
                          const std::function<double(std::uint64_t)>& f,
                          double rel_tol) {
  if (r == 0 || n_b == 0.0) return f(0); // degenerate: all mass at k = 0
  const double q = n_b / (n_b + 1.0);
  const double rd = static_cast<double>(r);
  const auto km = static_cast<std::uint64_t>(
      std::max(0.0, std::floor(rd * n_b - n_b - 1.0)));
  const double kd = static_cast<double>(km);
  const double ln_anchor = std::lgamma(kd + rd) - std::lgamma(kd + 1.0) -
                           std::lgamma(rd) + kd * std::log(n_b) -
                           (kd + rd) * std::log1p(n_b);
  double acc = f(km); // relative to the anchor weight
  // Upward sweep: w(k+1)/w(k) = (k+r)/(k+1) * q, < 1 above the mode.
  double w = 1.0;
  for (std::uint64_t k = km;; ++k) {
    const double ratio =
        (static_cast<double>(k) + rd) / (static_cast<double>(k) + 1.0) * q;
    w *= ratio;
    const double fk = f(k + 1);
    acc += w * fk;
    if (ratio < 1.0 && w * fk * ratio / (1.0 - ratio) < 0.25 * rel_tol * acc)
      break;
    require(k < km + 100000000ull, errc::numeric,
            "negative-binomial window failed to converge");
  }
  // Downward sweep: w(k-1)/w(k) = k / ((k+r-1) q), < 1 below the mode.
  w = 1.0;
  const double f0 = f(0);
  for (std::uint64_t k = km; k > 0; --k) {
    const double ratio =
        static_cast<double>(k) / ((static_cast<double>(k) + rd - 1.0) * q);
    w *= ratio;
    acc += w * f(k - 1);
    if (ratio < 1.0 && w * f0 * ratio / (1.0 - ratio) < 0.25 * rel_tol * acc)
      break;
  }
  return std::exp(ln_anchor) * acc;
}

} // namespace

double p_f_exact(const ScenarioParams& p, double rel_tol) {
  check_exact_args(p, rel_tol);
  if (p.n_b == 0.0) return 0.0; // no background, no false alarms
  const auto m = static_cast<std::uint64_t>(p.m);
  const double q = p.n_b / (p.n_b + 1.0);
  // p_F = E_n~thermal E_k~NegBin(M-1) [ n / (n + k + M - 1) ].
  double acc = 0.0;
  double wn = thermal_pmf(1, p.n_b); // n = 0 contributes nothing
  for (std::uint64_t n = 1;; ++n) {
    const double nd = static_cast<double>(n);
    acc += wn * negbin_expectation(
                    m - 1, p.n_b,
                    [&](std::uint64_t k) {
                      return nd / (nd + static_cast<double>(k) +
                                   static_cast<double>(m) - 1.0);
                    },
                    rel_tol);
    // Remaining thermal mass times sup f <= 1: sum_{n'>n} th(n') = th(n) n_b.
    if (wn * p.n_b < 0.25 * rel_tol * acc) break;
    wn *= q;
  }
  return acc;
}

double p_d_exact(const ScenarioParams& p, double rel_tol) {
  check_exact_args(p, rel_tol);
  const auto m = static_cast<std::uint64_t>(p.m);
  const double md = static_cast<double>(m);
  const double q = p.n_b / (p.n_b + 1.0);

  // Same-idler-mode part: weights over the occupation n above the projected
  // photon in the distinguished mode,
  //   A(n) = (1 - kappa/(n_b+1)) th(n+1)   (background photon retained)
  //   B(n) = kappa (n+1) n_b^n / (n_b+1)^(n+3)  (signal photon retained)
  // with E_k~NegBin(M-1) [ (n+1) / (n + k + M) ].
  double part1 = 0.0;
  {
    const double ca = 1.0 - p.kappa / (p.n_b + 1.0);
    for (std::uint64_t n = 0;; ++n) {
      const double nd = static_cast<double>(n);
      const double wa = ca * thermal_pmf(n + 1, p.n_b);
      const double wb = p.kappa * (nd + 1.0) *
                        (p.n_b == 0.0 ? (n == 0 ? 1.0 : 0.0)
                                      : std::exp(nd * std::log(p.n_b))) /
                        std::pow(p.n_b + 1.0, nd + 3.0);
      part1 += (wa + wb) *
               negbin_expectation(
                   m - 1, p.n_b,
                   [&](std::uint64_t k) {
                     return (nd + 1.0) /
                            (nd + static_cast<double>(k) + md);
                   },
                   rel_tol);
      // Geometric tails: sum_{n'>n} wa <= wa n_b; wb has decreasing ratio
      // q (n+2)/(n+1), bounding its tail once that ratio drops below 1.
      const double rho = q * (nd + 2.0) / (nd + 1.0);
      if (p.n_b == 0.0) break;
      if (rho < 1.0 &&
          wa * p.n_b + wb * rho / (1.0 - rho) < 0.25 * rel_tol * part1)
        break;
    }
  }

  // Cross-idler-mode part: kappa (M-1) sum over the occupations n, n' of the
  // two distinguished modes with weights g(x) = (x+1) n_b^x / (n_b+1)^(x+2)
  // and E_k~NegBin(M-2) [ 1 / (n + n' + k + M) ]. The inner expectation
  // depends on n, n' only through t = n + n', so it is memoized by t.
  double part2 = 0.0;
  {
    std::vector<double> inner_by_t;
    auto inner = [&](std::uint64_t t) {
      while (inner_by_t.size() <= t) {
        const double td = static_cast<double>(inner_by_t.size());
        inner_by_t.push_back(negbin_expectation(
            m - 2, p.n_b,
            [&](std::uint64_t k) {
              return 1.0 / (td + static_cast<double>(k) + md);
            },
            rel_tol));
      }
      return inner_by_t[t];
    };
    auto g = [&](std::uint64_t x) {
      const double xd = static_cast<double>(x);
      if (p.n_b == 0.0) return x == 0 ? 1.0 : 0.0;
      return (xd + 1.0) * std::exp(xd * std::log(p.n_b) -
                                   (xd + 2.0) * std::log1p(p.n_b));
    };
    const double scale = p.kappa * (md - 1.0);
    for (std::uint64_t n = 0;; ++n) {
      const double gn = g(n);
      double row = 0.0;
      for (std::uint64_t n2 = 0;; ++n2) {
        const double gn2 = g(n2);
        row += gn2 * inner(n + n2);
        const double rho = q * (static_cast<double>(n2) + 2.0) /
                           (static_cast<double>(n2) + 1.0);
        if (p.n_b == 0.0) break;
        if (rho < 1.0 && gn2 * rho / (1.0 - rho) / md <
                             0.25 * rel_tol * std::max(row, part2 / scale))
          break;
      }
      part2 += scale * gn * row;
      const double rho = q * (static_cast<double>(n) + 2.0) /
                         (static_cast<double>(n) + 1.0);
      if (p.n_b == 0.0) break;
      if (rho < 1.0 &&
          scale * gn * rho / (1.0 - rho) / md < 0.25 * rel_tol * part2)
        break;
    }
  }

  return part1 + part2;
}

double rho1_element(std::size_t m_index, std::size_t m_prime,
                    std::span<const std::uint32_t> n,
                    std::span<const std::uint32_t> n_prime, double kappa,
                    double n_b) {
  require(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0, errc::domain,
          "kappa must lie in (0, 1]");
  require(std::isfinite(n_b) && n_b >= 0.0, errc::domain, "n_b must be >= 0");
  const std::size_t modes = n.size();
  require(modes >= 2 && n_prime.size() == modes && m_index < modes &&
              m_prime < modes,
          errc::dimension, "occupation lists and idler labels must agree");
  const double md = static_cast<double>(modes);

  if (m_index == m_prime) {
    for (std::size_t l = 0; l < modes; ++l)
      if (n[l] != n_prime[l]) return 0.0;
    double p_other = 1.0;
    for (std::size_t l = 0; l < modes; ++l)
      if (l != m_index) p_other *= thermal_pmf(n[l], n_b);
    const double nm = n[m_index];
    double on_mode =
        (1.0 - kappa / (n_b + 1.0)) * thermal_pmf(n[m_index], n_b);
    if (n[m_index] >= 1) {
      // kappa n_m th(n_m) / (n_b (n_b+1)) written without the 1/n_b pole.
      on_mode += kappa * nm *
                 (n_b == 0.0 ? (n[m_index] == 1 ? 1.0 : 0.0)
                             : std::exp((nm - 1.0) * std::log(n_b))) /
                 std::pow(n_b + 1.0, nm + 2.0);
    }
    return p_other * on_mode / md;
  }

  // Cross terms: one signal photon moved from mode m_prime to m_index.
  if (n[m_index] != n_prime[m_index] + 1 ||
      n_prime[m_prime] != n[m_prime] + 1)
    return 0.0;
  for (std::size_t l = 0; l < modes; ++l)
    if (l != m_index && l != m_prime && n[l] != n_prime[l]) return 0.0;
  double p_other = 1.0;
  for (std::size_t l = 0; l < modes; ++l)
    if (l != m_index && l != m_prime) p_other *= thermal_pmf(n[l], n_b);
  const double a = n_prime[m_index]; // occupation below the moved photon
  const double b = n[m_prime];
  const double ln_w =
      (n_b == 0.0 ? (a + b == 0.0 ? 0.0 : -kInf)
                  : (a + b) * std::log(n_b)) -
      (a + b + 4.0) * std::log1p(n_b);
  return kappa / md * p_other * std::exp(ln_w) *
         std::sqrt((a + 1.0) * (b + 1.0));
}

namespace {

void enumerate_occupations(unsigned modes, unsigned budget,
                           std::vector<std::uint32_t>& scratch,
                           std::vector<std::vector<std::uint32_t>>& out) {
  if (scratch.size() == modes) {
    out.push_back(scratch);
    return;
  }
  for (unsigned v = 0; v <= budget; ++v) {
    scratch.push_back(v);
    enumerate_occupations(modes, budget - v, scratch, out);
    scratch.pop_back();
  }
}

} // namespace

double nb_log_pmf(std::uint64_t k, std::uint64_t modes, double n_b) {
  require(modes >= 1, errc::domain, "modes must be >= 1");
  if (n_b == 0.0) return k == 0 ? 0.0 : -kInf;
  const double kd = static_cast<double>(k);
  const double rd = static_cast<double>(modes);
  return std::lgamma(kd + rd) - std::lgamma(kd + 1.0) - std::lgamma(rd) +
         kd * std::log(n_b) - (kd + rd) * std::log1p(n_b);
}

double nb_tail_mass(std::uint64_t modes, std::uint64_t cutoff, double n_b) {
  require(modes >= 1, errc::domain, "modes must be >= 1");
  if (n_b == 0.0) return 0.0;
  const double q = n_b / (n_b + 1.0);
  const double rd = static_cast<double>(modes);
  // Direct upper-tail sum from cutoff+1 (no cancellation), anchored at the
  // first term, with the geometric ratio bound for truncation.
  const double ln_anchor = nb_log_pmf(cutoff + 1, modes, n_b);
  double acc = 1.0;
  double w = 1.0;
  for (std::uint64_t k = cutoff + 1;; ++k) {
    const double ratio =
        (static_cast<double>(k) + rd) / (static_cast<double>(k) + 1.0) * q;
    w *= ratio;
    acc += w;
    if (ratio < 1.0 && w * ratio / (1.0 - ratio) < 1e-16 * acc) break;
    require(k < cutoff + 100000000ull, errc::numeric,
            "tail sum failed to converge");
  }
  return std::exp(ln_anchor) * acc;
}

BruteForceResult brute_force(const ScenarioParams& p, unsigned cutoff) {
  require(p.m >= 2.0 && p.m == std::floor(p.m) && p.m <= 64.0, errc::domain,
          "brute force requires an integer m in [2, 64]");
  require(cutoff >= 1 && cutoff <= 64, errc::range,
          "cutoff must lie in [1, 64]");
  const auto modes = static_cast<unsigned>(p.m);

  std::vector<std::vector<std::uint32_t>> occ;
  {
    std::vector<std::uint32_t> scratch;
    enumerate_occupations(modes, cutoff, scratch, occ);
  }
  const std::size_t dim = occ.size() * modes;
  require(dim <= 4096, errc::dimension,
          "truncated basis exceeds the 4096-dimension cap");

  // Basis index: |occ[i], idler m> -> i * modes + m.
  auto idx = [&](std::size_t i, unsigned m) { return i * modes + m; };

  Eigen::MatrixXd rho1 = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd rho0_diag(dim);
  for (std::size_t i = 0; i < occ.size(); ++i) {
    double th = 1.0;
    for (unsigned l = 0; l < modes; ++l) th *= thermal_pmf(occ[i][l], p.n_b);
    for (unsigned m = 0; m < modes; ++m)
      rho0_diag[idx(i, m)] = th / static_cast<double>(modes);
  }
  for (std::size_t i = 0; i < occ.size(); ++i)
    for (std::size_t j = 0; j < occ.size(); ++j)
      for (unsigned mi = 0; mi < modes; ++mi)
        for (unsigned mj = 0; mj < modes; ++mj)
          rho1(idx(i, mi), idx(j, mj)) =
              rho1_element(mi, mj, occ[i], occ[j], p.kappa, p.n_b);

  // Projector onto span{ |psi_N>, |N| <= cutoff-1 } where
  // |psi_N> = sum_m sqrt((N_m+1)/(|N|+M)) |N + 1_m, idler m>.
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(dim, dim);
  {
    // Map occupation -> basis row for O(1) lookup of N + 1_m.
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> lut;
    lut.reserve(occ.size());
    for (std::size_t i = 0; i < occ.size(); ++i) lut.emplace_back(occ[i], i);
    std::sort(lut.begin(), lut.end());
    auto find_occ = [&](const std::vector<std::uint32_t>& key) {
      auto it = std::lower_bound(
          lut.begin(), lut.end(), key,
          [](const auto& a, const auto& k) { return a.first < k; });
      require(it != lut.end() && it->first == key, errc::dimension,
              "projector lookup escaped the truncated basis");
      return it->second;
    };
    Eigen::VectorXd psi(dim);
    for (const auto& base : occ) {
      unsigned total = 0;
      for (const auto v : base) total += v;
      if (total > cutoff - 1) continue;
      psi.setZero();
      auto lifted = base;
      for (unsigned m = 0; m < modes; ++m) {
        lifted[m] += 1;
        psi[idx(find_occ(lifted), m)] =
            std::sqrt((static_cast<double>(base[m]) + 1.0) /
                      (static_cast<double>(total) + static_cast<double>(modes)));
        lifted[m] -= 1;
      }
      pi.noalias() += psi * psi.transpose();
    }
  }

  // Probability weight of rho_1 excluded by the truncation, in closed form:
  // the background branch carries the M-mode negative-binomial tail, the
  // signal branch one extra photon plus an (M+1)-mode-shaped tail.
  const double tail =
      (1.0 - p.kappa / (p.n_b + 1.0)) * nb_tail_mass(modes, cutoff, p.n_b) +
      p.kappa / (p.n_b + 1.0) *
          nb_tail_mass(modes + 1, cutoff - 1, p.n_b);
  BruteForceResult out{ShotProbs{0.0, 0.0}, tail,
                       OracleDiagnostics{0.0, 0.0, 0.0, 0.0}};
  out.probs.p_f = pi.diagonal().dot(rho0_diag);
  out.probs.p_d = (pi.cwiseProduct(rho1)).sum(); // tr(Pi rho1), both symmetric
  out.diag.trace_rho1 = rho1.trace();
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho1,
                                                      Eigen::EigenvaluesOnly);
    out.diag.min_eigenvalue = es.eigenvalues().minCoeff();
  }
  out.diag.projector_residual =
      ((pi * pi - pi).cwiseAbs()).maxCoeff();

  // Invariance of tr(Pi U rho1 U^dag) under joint phase rotations
  // U|N, m> = exp(i (sum_l N_l theta_l - theta_m)) |N, m>.
  {
    std::mt19937_64 rng(0x51c0ffee);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<double> theta(modes);
      for (auto& t : theta) t = uni(rng);
      std::vector<double> phase(dim);
      for (std::size_t i = 0; i < occ.size(); ++i) {
        double base = 0.0;
        for (unsigned l = 0; l < modes; ++l) base += occ[i][l] * theta[l];
        for (unsigned m = 0; m < modes; ++m)
          phase[idx(i, m)] = base - theta[m];
      }
      std::complex<double> rotated = 0.0;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          if (pi(r, c) != 0.0 && rho1(c, r) != 0.0)
            rotated += pi(r, c) * rho1(c, r) *
                       std::exp(std::complex<double>(
                           0.0, phase[c] - phase[r]));
      worst = std::max(worst, std::abs(rotated.real() - out.probs.p_d) +
                                  std::abs(rotated.imag()));
    }
    out.diag.phase_invariance_residual = worst;
  }
  return out;
}

} // namespace qi
