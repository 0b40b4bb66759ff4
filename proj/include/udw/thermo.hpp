#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "udw/dephasing.hpp"
#include "udw/xstate.hpp"

// Thermodynamics of the detector pair: spectrum and von Neumann entropy of
// the X state, internal energy against the free two-detector Hamiltonian,
// and the quantum Stirling cycle built from four steady-state corners.
// Entropy and heats use natural logarithms (nats); k_B = hbar = 1.

namespace udw {

// Eigenvalues of a symmetric X state (r22 = r33): {r11, r44, r22 + r23,
// r22 - r23}, returned in descending order.  The symmetric form is the only
// one used by the cycle; asymmetric inputs are rejected.
inline std::array<double, 4> spectrum(const XState& s) {
  if (std::abs(s.r22 - s.r33) > 1e-12) {
    throw std::domain_error("spectrum: requires r22 = r33");
  }
  std::array<double, 4> lam{s.r11, s.r44, s.r22 + s.r23, s.r22 - s.r23};
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return lam;
}

// von Neumann entropy S = -sum lambda ln lambda in nats, with 0 ln 0 = 0.
// Uses the exact inner-block eigenvalues, so it is defined for any valid X
// state, symmetric or not.
inline double entropy(const XState& s) {
  const double mid = 0.5 * (s.r22 + s.r33);
  const double split = std::hypot(0.5 * (s.r22 - s.r33), s.r23);
  const double lam[] = {s.r11, s.r44, mid + split, mid - split};
  double sum = 0.0;
  for (double l : lam) {
    if (l > 0.0) sum -= l * std::log(l);
  }
  return sum;
}

// Internal energy U = tr(rho H0) with H0 = (omega/2)(sigma_z^A + sigma_z^B):
// U = omega (r11 - r44).
inline double internal_energy(const XState& s, double omega) {
  if (!(omega > 0.0)) {
    throw std::domain_error("internal_energy: omega must be positive");
  }
  return omega * (s.r11 - s.r44);
}

// Quantum Stirling cycle on steady states:
//   A = (omega_a, t_hot) -> B = (omega_b, t_hot)   isothermal, gap shrinks
//   B -> C = (omega_b, t_cold)                      isochoric cooling
//   C -> D = (omega_a, t_cold)                      isothermal, gap grows
//   D -> A                                          isochoric heating
// When a dephasing channel and an exposure time are given, every corner
// state is attenuated before its entropy/energy enters the bookkeeping.
struct CycleSpec {
  double omega_a = 1.0;
  double omega_b = 0.5;
  double t_hot = 1.0;
  double t_cold = 0.5;
  double delta0 = 0.0;
  std::optional<DephasingChannel> channel;
  std::optional<double> time;
};

struct CycleResult {
  double q_ab = 0.0;
  double q_bc = 0.0;
  double q_cd = 0.0;
  double q_da = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
  std::optional<double> efficiency;  // undefined when q_hot = 0
};

inline CycleResult stirling_cycle(const CycleSpec& spec) {
  if (!(spec.omega_a > 0.0) || !(spec.omega_b > 0.0)) {
    throw std::domain_error("stirling_cycle: gaps must be positive");
  }
  if (!(spec.t_cold > 0.0) || !(spec.t_hot > spec.t_cold)) {
    throw std::domain_error("stirling_cycle: requires t_hot > t_cold > 0");
  }
  if (spec.channel.has_value() != spec.time.has_value()) {
    throw std::domain_error(
        "stirling_cycle: channel and time must be set together");
  }

  const auto corner = [&spec](double omega, double temperature) {
    XState s = steady_state(
        {.delta0 = spec.delta0, .omega = omega, .temperature = temperature});
    if (spec.channel) {
      s = evolve(s, *spec.time, *spec.channel);
    }
    return s;
  };
  const XState a = corner(spec.omega_a, spec.t_hot);
  const XState b = corner(spec.omega_b, spec.t_hot);
  const XState c = corner(spec.omega_b, spec.t_cold);
  const XState d = corner(spec.omega_a, spec.t_cold);

  CycleResult r;
  r.q_ab = spec.t_hot * (entropy(b) - entropy(a));
  r.q_bc = internal_energy(c, spec.omega_b) - internal_energy(b, spec.omega_b);
  r.q_cd = spec.t_cold * (entropy(d) - entropy(c));
  r.q_da = internal_energy(a, spec.omega_a) - internal_energy(d, spec.omega_a);
  r.q_hot = r.q_ab + r.q_da;
  r.q_cold = r.q_bc + r.q_cd;
  r.work = r.q_hot + r.q_cold;  // first-law closure by construction
  if (r.q_hot != 0.0) {
    r.efficiency = r.work / r.q_hot;
  }
  return r;
}

}  // namespace udw
