#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "udw/xstate.hpp"

// Closed-form quantum correlation measures for X states with a single real
// coherence: entropic steering, concurrence / entanglement of formation,
// trace-norm geometric quantum discord, and l1 coherence.  Information-like
// measures (steering, EoF) are in bits; base-2 logarithms throughout.

namespace udw {

namespace detail {

inline double xlog2(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

// Binary Shannon entropy in bits with the 0 log 0 = 0 convention.
inline double binary_entropy(double x) { return -xlog2(x) - xlog2(1.0 - x); }

}  // namespace detail

struct SteeringResult {
  double s_ab = 0.0;       // A steers B
  double s_ba = 0.0;       // B steers A
  double asymmetry = 0.0;  // |s_ab - s_ba|
  double f_ab = 0.0;       // raw mutual-information functional for A -> B
};

// Entropic steering built from the three mutually unbiased Pauli bases.  The
// functional per direction is
//   F = (1/2) sum_i sum_ab w_i(a,b) log2 w_i(a,b) - sum_a w^A(a) log2 w^A(a)
// with joint weights w = 4 P(a,b); steerability S = max(0, (F - 2) / 4).
// For our X states the sigma_x and sigma_y bases contribute identically
// (weights 1 +- 2 r23) and the sigma_z basis contributes the populations.
inline SteeringResult steering(const XState& s) {
  using detail::xlog2;
  const double c = 2.0 * s.r23;
  const double joint_xy = 2.0 * (xlog2(1.0 + c) + xlog2(1.0 - c));
  const double joint_z = xlog2(4.0 * s.r11) + xlog2(4.0 * s.r22) +
                         xlog2(4.0 * s.r33) + xlog2(4.0 * s.r44);
  const double joint = 0.5 * (2.0 * joint_xy + joint_z);
  // Only the sigma_z marginals are non-uniform; <sigma_z> differs per side.
  const double mz_a = s.r11 + s.r22 - s.r33 - s.r44;
  const double mz_b = s.r11 - s.r22 + s.r33 - s.r44;
  const double f_ab = joint - (xlog2(1.0 + mz_a) + xlog2(1.0 - mz_a));
  const double f_ba = joint - (xlog2(1.0 + mz_b) + xlog2(1.0 - mz_b));
  SteeringResult r;
  r.s_ab = std::max(0.0, 0.25 * (f_ab - 2.0));
  r.s_ba = std::max(0.0, 0.25 * (f_ba - 2.0));
  r.asymmetry = std::abs(r.s_ab - r.s_ba);
  r.f_ab = f_ab;
  return r;
}

// Wootters concurrence specialised to an X state with coherence r23 only:
//   C = 2 max{0, |r23| - sqrt(r11 r44), -sqrt(r22 r33)}.
// The second branch is never positive, so it matters only when both branches
// are negative and C = 0.
inline double concurrence(const XState& s) {
  const double outer = std::sqrt(std::max(0.0, s.r11 * s.r44));
  const double inner = std::sqrt(std::max(0.0, s.r22 * s.r33));
  return 2.0 * std::max({0.0, std::abs(s.r23) - outer, -inner});
}

// Entanglement of formation as the monotone function of concurrence,
//   EoF = H2((1 + sqrt(1 - C^2)) / 2), in bits.
inline double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::domain_error(
        "entanglement_of_formation: concurrence must lie in [0, 1]");
  }
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return detail::binary_entropy(x);
}

struct GqdResult {
  double value = 0.0;
  bool from_fallback = false;  // true when the closed form was degenerate
};

namespace detail {

// Closed-form trace-norm geometric discord for X states, written in terms of
// the Fano-Bloch components.  Returns nullopt when the discriminating
// denominator collapses (|F33| = |F11| with F30 = 0), where the formula is
// 0/0 and a numerical minimisation must take over.
inline std::optional<double> gqd_closed_form(const XState& s) {
  const FanoBloch f = fano_bloch(s);
  const double f11sq = f.f11 * f.f11;
  const double f22sq = f.f22 * f.f22;
  const double f33sq = f.f33 * f.f33;
  const double big = std::max(f33sq, f22sq + f.f30 * f.f30);
  const double small = std::min(f33sq, f11sq);
  const double den = big - small + f11sq - f22sq;
  if (std::abs(den) <= 1e-9) {
    return std::nullopt;
  }
  const double num = f11sq * big - f22sq * small;
  return 0.5 * std::sqrt(num / den);
}

}  // namespace detail

// l1-norm coherence: the absolute sum of off-diagonal elements, 2 |r23|.
inline double coherence_l1(const XState& s) { return 2.0 * std::abs(s.r23); }

}  // namespace udw
