// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qi {

// Error taxonomy mirrored by the C API's qi_status values.
enum class errc {
  domain,    // argument outside its mathematical domain
  range,     // argument outside the supported numeric range
  ordering,  // requires p_f < p_d
  no_root,   // solver bracket has no sign change / no solution
  dimension, // basis / mode-label dimension mismatch or overflow
  numeric,   // internal loss of numerical validity
  invalid,   // malformed call
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Scenario for the Bell-state protocol: per-pulse transmissivity kappa,
// background brightness n_b, per-pulse dimensionality m (>= 2, integral
// values expected by the exact oracles, real values allowed elsewhere).
struct ScenarioParams {
  double kappa;
  double n_b;
  double m;

  ScenarioParams(double kappa_, double n_b_, double m_)
      : kappa(kappa_), n_b(n_b_), m(m_) {
    require(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0, errc::domain,
            "kappa must lie in (0, 1]");
    require(std::isfinite(n_b) && n_b >= 0.0, errc::domain,
            "n_b must be >= 0");
    require(std::isfinite(m) && m >= 2.0, errc::domain, "m must be >= 2");
  }
};

// Per-shot detection probabilities; a usable likelihood ratio additionally
// needs p_f < p_d, checked where required (not here).
struct ShotProbs {
  double p_f;
  double p_d;

  ShotProbs(double p_f_, double p_d_) : p_f(p_f_), p_d(p_d_) {
    require(std::isfinite(p_f) && p_f >= 0.0 && p_f <= 1.0, errc::domain,
            "p_f must lie in [0, 1]");
    require(std::isfinite(p_d) && p_d >= 0.0 && p_d <= 1.0, errc::domain,
            "p_d must lie in [0, 1]");
  }

  void require_ordered() const {
    require(p_f > 0.0 && p_d < 1.0 && p_f < p_d, errc::ordering,
            "requires 0 < p_f < p_d < 1");
  }
};

// A probability carried in log domain (ln p <= 0; -inf means exactly 0).
struct LogProb {
  double ln_p;
  double prob() const { return std::exp(ln_p); }
};

} // namespace qi
