#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

// Two-qubit X states for a pair of uniformly accelerated Unruh-DeWitt
// detectors coupled to a common massless scalar field.  In the shared basis
// {|00>, |01>, |10>, |11>} the asymptotic (late-time) state is an X state
// with a single real coherence between |01> and |10>.  Everything downstream
// (dephasing, correlation quantifiers, thermodynamics) operates on this
// five-number parametrisation.

namespace udw {

// Tolerance used when checking physicality constraints.
inline constexpr double kValidationTol = 1e-12;

// gamma = tanh(omega / 2T), the thermality ratio seen by a detector with gap
// omega at effective (Unruh) temperature T.  gamma -> 1 as T -> 0 and
// gamma -> 0 as T -> infinity.  Wrapped in a struct so that the two
// steady_state overloads cannot be confused.
struct UnruhRatio {
  double gamma = 1.0;
};

inline UnruhRatio gamma_ratio(double omega, double temperature) {
  if (!(omega > 0.0)) {
    throw std::domain_error("gamma_ratio: omega must be positive");
  }
  if (std::isinf(temperature) && temperature > 0.0) {
    return UnruhRatio{0.0};  // infinite-temperature sentinel
  }
  if (!(temperature > 0.0)) {
    throw std::domain_error("gamma_ratio: temperature must be positive");
  }
  // tanh saturates, so omega/(2T) overflowing to inf still yields gamma = 1.
  return UnruhRatio{std::tanh(0.5 * omega / temperature)};
}

struct SteadyStateParams {
  double delta0 = 0.0;       // conserved correlation parameter, in [-3, 1]
  double omega = 1.0;        // detector energy gap, > 0
  double temperature = 1.0;  // Unruh temperature, > 0 (or +inf)
};

// X-state density matrix with real coherence:
//   diag(r11, r22, r33, r44), rho_23 = rho_32 = r23, all other entries zero.
struct XState {
  double r11 = 0.25;
  double r22 = 0.25;
  double r33 = 0.25;
  double r44 = 0.25;
  double r23 = 0.0;
};

// Late-time steady state reached under the shared-bath master equation.
// The populations of |00> and |11> carry the (gamma -+ 1)^2 factors
// respectively: the ground-heavy weight must sit on r44 so that the
// low-temperature (gamma -> 1) limit depopulates the doubly excited level.
inline XState steady_state(double delta0, UnruhRatio ratio) {
  if (!(delta0 >= -3.0 && delta0 <= 1.0)) {
    throw std::domain_error("steady_state: delta0 must lie in [-3, 1]");
  }
  const double g = ratio.gamma;
  if (!(g >= 0.0 && g <= 1.0)) {
    throw std::domain_error("steady_state: gamma must lie in [0, 1]");
  }
  const double g2 = g * g;
  const double den = 4.0 * (3.0 + g2);
  XState s;
  s.r11 = (3.0 + delta0) * (g - 1.0) * (g - 1.0) / den;
  s.r22 = (3.0 - delta0 - (delta0 + 1.0) * g2) / den;
  s.r33 = s.r22;
  s.r44 = (3.0 + delta0) * (g + 1.0) * (g + 1.0) / den;
  s.r23 = (delta0 - g2) / (2.0 * (3.0 + g2));
  return s;
}

inline XState steady_state(const SteadyStateParams& p) {
  return steady_state(p.delta0, gamma_ratio(p.omega, p.temperature));
}

// delta0 = <sigma_A . sigma_B> is a constant of the motion; recovering it
// from the state inverts the steady-state map.
inline double delta_of(const XState& s) {
  return 4.0 * s.r23 + (s.r11 - s.r22 - s.r33 + s.r44);
}

// Nonzero Fano-Bloch correlation components T_ab of an X state with real
// coherence: T_11, T_22, T_33 plus the local component T_30 = <sigma_z x 1>.
struct FanoBloch {
  double f11 = 0.0;
  double f22 = 0.0;
  double f33 = 0.0;
  double f30 = 0.0;
};

inline FanoBloch fano_bloch(const XState& s) {
  FanoBloch f;
  f.f11 = 2.0 * s.r23;
  f.f22 = 2.0 * s.r23;
  f.f33 = 1.0 - 2.0 * (s.r22 + s.r33);
  f.f30 = 2.0 * (s.r11 + s.r22) - 1.0;
  return f;
}

struct Violation {
  std::string constraint;
  double residual = 0.0;
};

// Physicality audit: unit trace, nonnegative populations, and positive
// semidefiniteness of the inner 2x2 block (r23^2 <= r22 r33).  Returns one
// entry per violated constraint with the measured residual.
inline std::vector<Violation> validate(const XState& s) {
  std::vector<Violation> out;
  const double trace_err = std::abs(s.r11 + s.r22 + s.r33 + s.r44 - 1.0);
  if (trace_err > kValidationTol) {
    out.push_back({"trace = 1", trace_err});
  }
  const struct {
    const char* name;
    double value;
  } diag[] = {{"r11 >= 0", s.r11},
              {"r22 >= 0", s.r22},
              {"r33 >= 0", s.r33},
              {"r44 >= 0", s.r44}};
  for (const auto& d : diag) {
    if (d.value < -kValidationTol) {
      out.push_back({d.name, -d.value});
    }
  }
  const double block = s.r23 * s.r23 - s.r22 * s.r33;
  if (block > kValidationTol) {
    out.push_back({"r23^2 <= r22*r33", block});
  }
  return out;
}

}  // namespace udw
