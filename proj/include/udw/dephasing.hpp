#pragma once

#include <cmath>
#include <stdexcept>

#include "udw/xstate.hpp"

// Classical-noise dephasing of the detector pair: each qubit sees random
// telegraph noise (RTN) with switching time scale tau, and a fraction mu of
// the ensemble is shielded from the noise altogether.  The channel only
// attenuates the |01><10| coherence; populations are untouched.

namespace udw {

struct DephasingChannel {
  double tau = 1.0;  // RTN correlation time, > 0, in units of the coupling
  double mu = 0.0;   // shielded fraction, in [0, 1]
};

namespace detail {

inline void check_channel(const DephasingChannel& ch) {
  if (!(ch.tau > 0.0)) {
    throw std::domain_error("dephasing: tau must be positive");
  }
  if (!(ch.mu >= 0.0 && ch.mu <= 1.0)) {
    throw std::domain_error("dephasing: mu must lie in [0, 1]");
  }
}

}  // namespace detail

// RTN memory kernel h(t).  With nu = sqrt(|4 tau^2 - 1|) and a = t / (2 tau):
//   4 tau > 1 (slow noise):  h = e^{-a} [cos(nu a) + sin(nu a) / nu]
//   4 tau < 1 (fast noise):  h = e^{-a} [cosh(nu a) + sinh(nu a) / nu]
// The borderline 4 tau = 1 is a removable singularity of the closed form and
// is rejected rather than patched.
inline double rtn_kernel(double t, double tau) {
  if (!(t >= 0.0)) {
    throw std::domain_error("rtn_kernel: t must be nonnegative");
  }
  if (!(tau > 0.0)) {
    throw std::domain_error("rtn_kernel: tau must be positive");
  }
  if (4.0 * tau == 1.0) {
    throw std::domain_error("rtn_kernel: 4*tau == 1 is a branch point");
  }
  const double nu = std::sqrt(std::abs(4.0 * tau * tau - 1.0));
  const double a = 0.5 * t / tau;
  const double x = nu * a;
  if (4.0 * tau > 1.0) {
    return std::exp(-a) * (std::cos(x) + std::sin(x) / nu);
  }
  // Fast-noise branch evaluated with decaying exponentials; the naive
  // cosh/sinh form overflows for large t even though h stays in (0, 1].
  // Grouping the symmetric and antisymmetric parts keeps h(0) exactly 1.
  const double ep = std::exp(x - a);
  const double em = std::exp(-x - a);
  return 0.5 * (ep + em) + 0.5 * (ep - em) / nu;
}

// Parity-flip probability of the telegraph process, p(t) = (1 - h(t)) / 2.
inline double dephasing_probability(double t, double tau) {
  const double p = 0.5 * (1.0 - rtn_kernel(t, tau));
  return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

// Ensemble-averaged coherence attenuation zeta(t) = (1 - mu) h(t)^2 + mu.
// The h^2 arises because both qubits dephase independently.
inline double attenuation(double t, const DephasingChannel& ch) {
  detail::check_channel(ch);
  const double h = rtn_kernel(t, ch.tau);
  return (1.0 - ch.mu) * h * h + ch.mu;
}

// Probability weights of the diagonal two-qubit Kraus decomposition
// L_ij = sqrt(p_ij) sigma_i x sigma_j with i, j in {0, z}.
struct KrausProbTable {
  double p00 = 1.0;
  double p03 = 0.0;
  double p30 = 0.0;
  double p33 = 0.0;
};

inline KrausProbTable kraus_probabilities(double p, double mu) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("kraus_probabilities: p must lie in [0, 1]");
  }
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::domain_error("kraus_probabilities: mu must lie in [0, 1]");
  }
  const double q = 1.0 - p;
  KrausProbTable table;
  table.p00 = (1.0 - mu) * q * q + mu * q;
  table.p03 = (1.0 - mu) * p * q;
  table.p30 = table.p03;
  table.p33 = (1.0 - mu) * p * p + mu * p;
  return table;
}

// Time evolution under the dephasing channel: r23 -> zeta(t) r23.
inline XState evolve(const XState& s, double t, const DephasingChannel& ch) {
  XState out = s;
  out.r23 *= attenuation(t, ch);
  return out;
}

}  // namespace udw
