#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "udw/dephasing.hpp"
#include "udw/gqd.hpp"
#include "udw/oracle.hpp"
#include "udw/quantifiers.hpp"
#include "udw/thermo.hpp"
#include "udw/xstate.hpp"

// Self-contained validation suite cross-checking every closed form against
// the oracle layer on steady-state grids and random X states.  Used by the
// CLI `validate` subcommand and by the acceptance runner.

namespace udw {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

// Random valid X state: Dirichlet(1,1,1,1) diagonal (optionally with
// r22 = r33 enforced) and r23 uniform within the PSD bound.
inline XState random_x_state(std::mt19937_64& rng, bool symmetric) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto draw_exp = [&]() {
    double u = unit(rng);
    while (u <= 0.0) u = unit(rng);
    return -std::log(u);
  };
  double w[4] = {draw_exp(), draw_exp(), draw_exp(), draw_exp()};
  const double total = w[0] + w[1] + w[2] + w[3];
  XState s;
  s.r11 = w[0] / total;
  s.r22 = w[1] / total;
  s.r33 = w[2] / total;
  s.r44 = w[3] / total;
  if (symmetric) {
    const double mid = 0.5 * (s.r22 + s.r33);
    s.r22 = mid;
    s.r33 = mid;
  }
  const double bound = std::sqrt(s.r22 * s.r33);
  s.r23 = (2.0 * unit(rng) - 1.0) * bound;
  return s;
}

namespace detail {

class CheckTimer {
 public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// std::to_string renders doubles with %f, which shows small residuals as
// 0.000000; check details want the actual magnitude.
inline std::string fmt_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline std::vector<double> grid_values(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

}  // namespace detail

// Steady-state grid: unit trace, nonnegative spectrum, PSD block, and
// round-trip conservation of delta0.
inline CheckResult check_grid_physicality(int n_delta0 = 101,
                                          int n_gamma = 101) {
  detail::CheckTimer timer;
  CheckResult r{"grid physicality", true, "", 0.0};
  double worst = 0.0;
  long failures = 0;
  for (double d0 : detail::grid_values(-3.0, 1.0, n_delta0)) {
    for (double g : detail::grid_values(0.0, 1.0, n_gamma)) {
      const XState s = steady_state(d0, UnruhRatio{g});
      for (const Violation& v : validate(s)) {
        ++failures;
        worst = std::max(worst, v.residual);
      }
      const double round_trip = std::abs(delta_of(s) - d0);
      if (round_trip > 1e-12) {
        ++failures;
        worst = std::max(worst, round_trip);
      }
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(static_cast<long>(n_delta0) * n_gamma) +
             " grid states, " + std::to_string(failures) +
             " violations, worst residual " + detail::fmt_residual(worst);
  r.seconds = timer.elapsed();
  return r;
}

// Closed-form concurrence vs the generic Wootters computation.
inline CheckResult check_concurrence_oracle(int n_random = 1000,
                                            bool include_grid = true,
                                            double tol = 1e-10) {
  detail::CheckTimer timer;
  CheckResult r{"concurrence vs Wootters oracle", true, "", 0.0};
  std::mt19937_64 rng(20260815u);
  double worst = 0.0;
  long states = 0;
  const auto compare = [&](const XState& s) {
    const double closed = concurrence(s);
    const double oracle = wootters_concurrence(assemble(s));
    worst = std::max(worst, std::abs(closed - oracle));
    ++states;
  };
  for (int i = 0; i < n_random; ++i) {
    compare(random_x_state(rng, /*symmetric=*/false));
  }
  if (include_grid) {
    for (double d0 : detail::grid_values(-3.0, 1.0, 101)) {
      for (double g : detail::grid_values(0.0, 1.0, 101)) {
        compare(steady_state(d0, UnruhRatio{g}));
      }
    }
  }
  r.pass = worst <= tol;
  r.detail = std::to_string(states) + " states, worst |closed - oracle| = " +
             detail::fmt_residual(worst);
  r.seconds = timer.elapsed();
  return r;
}

// Closed-form GQD vs measurement minimisation on non-degenerate states.
inline CheckResult check_gqd_oracle(int n_states = 100, int grid_polar = 97,
                                    int grid_azimuth = 64, double tol = 1e-3) {
  detail::CheckTimer timer;
  CheckResult r{"gqd vs measurement-minimization oracle", true, "", 0.0};
  std::mt19937_64 rng(777001u);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < n_states) {
    const XState s = random_x_state(rng, /*symmetric=*/false);
    const auto closed = detail::gqd_closed_form(s);
    if (!closed) continue;  // degenerate; the fallback is its own oracle
    ++accepted;
    const double oracle =
        gqd_numerical(assemble(s), grid_polar, grid_azimuth, /*refine=*/true);
    worst = std::max(worst, std::abs(*closed - oracle));
  }
  r.pass = worst <= tol;
  r.detail = std::to_string(accepted) +
             " non-degenerate states, worst |closed - oracle| = " +
             detail::fmt_residual(worst);
  r.seconds = timer.elapsed();
  return r;
}

// Symmetric X-state spectrum vs the dense Jacobi eigensolver.
inline CheckResult check_spectrum_oracle(int n_random = 1000,
                                         double tol = 1e-10) {
  detail::CheckTimer timer;
  CheckResult r{"spectrum vs dense eigensolver", true, "", 0.0};
  std::mt19937_64 rng(424242u);
  double worst = 0.0;
  for (int i = 0; i < n_random; ++i) {
    const XState s = random_x_state(rng, /*symmetric=*/true);
    const auto closed = spectrum(s);
    const auto dense = dense_spectrum(assemble(s));
    for (int k = 0; k < 4; ++k) {
      worst = std::max(worst, std::abs(closed[static_cast<std::size_t>(k)] -
                                       dense[static_cast<std::size_t>(k)]));
    }
  }
  r.pass = worst <= tol;
  r.detail = std::to_string(n_random) + " states, worst eigenvalue gap = " +
             detail::fmt_residual(worst);
  r.seconds = timer.elapsed();
  return r;
}

// Steering closed form vs the from-scratch entropic oracle, on the steady
// grid and on random (generally asymmetric) X states.
inline CheckResult check_steering_oracle(int grid_n = 101, int n_random = 200,
                                         double tol = 1e-9) {
  detail::CheckTimer timer;
  CheckResult r{"steering vs entropic oracle", true, "", 0.0};
  std::mt19937_64 rng(550099u);
  double worst = 0.0;
  long states = 0;
  const auto compare = [&](const XState& s) {
    const SteeringResult closed = steering(s);
    const SteeringResult oracle = entropic_steering_oracle(assemble(s));
    worst = std::max({worst, std::abs(closed.s_ab - oracle.s_ab),
                      std::abs(closed.s_ba - oracle.s_ba),
                      std::abs(closed.f_ab - oracle.f_ab)});
    ++states;
  };
  for (double d0 : detail::grid_values(-3.0, 1.0, grid_n)) {
    for (double g : detail::grid_values(0.0, 1.0, grid_n)) {
      compare(steady_state(d0, UnruhRatio{g}));
    }
  }
  for (int i = 0; i < n_random; ++i) {
    compare(random_x_state(rng, /*symmetric=*/false));
  }
  r.pass = worst <= tol;
  r.detail = std::to_string(states) + " states, worst |closed - oracle| = " +
             detail::fmt_residual(worst);
  r.seconds = timer.elapsed();
  return r;
}

// evolve() vs the explicit four-operator Kraus application.
inline CheckResult check_kraus_equivalence(int n_time = 301,
                                           double tol = 1e-12) {
  detail::CheckTimer timer;
  CheckResult r{"Kraus map vs attenuation shortcut", true, "", 0.0};
  const XState bases[] = {
      steady_state({.delta0 = -2.0, .omega = 1.0, .temperature = 0.1}),
      steady_state({.delta0 = 0.5, .omega = 2.0, .temperature = 0.5})};
  double worst = 0.0;
  for (const XState& base : bases) {
    const Hermitian4 dense = assemble(base);
    for (double tau : {0.1, 5.0}) {
      for (double mu : {0.0, 0.3, 0.6, 1.0}) {
        const DephasingChannel ch{tau, mu};
        for (double t : detail::grid_values(0.0, 30.0, n_time)) {
          const double p = dephasing_probability(t, tau);
          const Hermitian4 via_kraus =
              kraus_apply(dense, kraus_probabilities(p, mu));
          const Hermitian4 via_zeta = assemble(evolve(base, t, ch));
          for (int k = 0; k < 16; ++k) {
            worst = std::max(
                worst, std::abs(via_kraus.a[static_cast<std::size_t>(k)] -
                                via_zeta.a[static_cast<std::size_t>(k)]));
          }
        }
      }
    }
  }
  r.pass = worst <= tol;
  r.detail = "worst element gap = " + detail::fmt_residual(worst);
  r.seconds = timer.elapsed();
  return r;
}

inline std::vector<CheckResult> run_validation_suite() {
  return {check_grid_physicality(), check_concurrence_oracle(),
          check_gqd_oracle(),       check_spectrum_oracle(),
          check_steering_oracle(),  check_kraus_equivalence()};
}

}  // namespace udw
