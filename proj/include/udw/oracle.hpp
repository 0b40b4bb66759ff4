#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "udw/dephasing.hpp"
#include "udw/jacobi.hpp"
#include "udw/parallel.hpp"
#include "udw/quantifiers.hpp"
#include "udw/xstate.hpp"

// Independent full-matrix reference implementations ("oracles") used to
// validate every closed form in the library: dense spectra, Wootters
// concurrence from the R-matrix, explicit Kraus application, trace-distance
// minimisation over von Neumann measurements, and an entropic steering
// functional built from raw projector probabilities.  Nothing here assumes
// the X structure beyond the assemble() entry point.

namespace udw {

using complexd = std::complex<double>;
using Mat2 = std::array<complexd, 4>;  // row-major 2x2

// Pauli matrices sigma_0..sigma_3.
inline constexpr Mat2 kSigma0{complexd{1, 0}, complexd{0, 0}, complexd{0, 0},
                              complexd{1, 0}};
inline constexpr Mat2 kSigma1{complexd{0, 0}, complexd{1, 0}, complexd{1, 0},
                              complexd{0, 0}};
inline constexpr Mat2 kSigma2{complexd{0, 0}, complexd{0, -1}, complexd{0, 1},
                              complexd{0, 0}};
inline constexpr Mat2 kSigma3{complexd{1, 0}, complexd{0, 0}, complexd{0, 0},
                              complexd{-1, 0}};

// Full 4x4 complex Hermitian matrix, row-major.
struct Hermitian4 {
  std::array<complexd, 16> a{};

  complexd& operator()(int i, int j) { return a[4 * i + j]; }
  const complexd& operator()(int i, int j) const { return a[4 * i + j]; }
};

inline Hermitian4 operator+(const Hermitian4& x, const Hermitian4& y) {
  Hermitian4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline Hermitian4 operator-(const Hermitian4& x, const Hermitian4& y) {
  Hermitian4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

inline Hermitian4 operator*(double c, const Hermitian4& x) {
  Hermitian4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = c * x.a[i];
  return r;
}

inline Hermitian4 matmul(const Hermitian4& x, const Hermitian4& y) {
  Hermitian4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      complexd acc{0, 0};
      for (int k = 0; k < 4; ++k) acc += x(i, k) * y(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

inline Hermitian4 kron(const Mat2& x, const Mat2& y) {
  Hermitian4 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          r(2 * i + k, 2 * j + l) = x[2 * i + j] * y[2 * k + l];
        }
      }
    }
  }
  return r;
}

inline complexd trace(const Hermitian4& m) {
  return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

inline double hermiticity_residual(const Hermitian4& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

// Builds the dense matrix for a (validated) X state.
inline Hermitian4 assemble(const XState& s) {
  if (!validate(s).empty()) {
    throw std::domain_error("assemble: state violates physicality constraints");
  }
  Hermitian4 m;
  m(0, 0) = s.r11;
  m(1, 1) = s.r22;
  m(2, 2) = s.r33;
  m(3, 3) = s.r44;
  m(1, 2) = s.r23;
  m(2, 1) = s.r23;
  return m;
}

namespace detail {

using Mat8 = std::array<double, 64>;

// Real embedding of a Hermitian matrix M = X + iY as the symmetric 8x8
// matrix [[X, -Y], [Y, X]].  The embedding is a ring homomorphism, so
// products and matrix functions commute with it; each eigenvalue of M
// appears twice, at sorted positions 0,2,4,6.
inline Mat8 real_embedding(const Hermitian4& m) {
  Mat8 e{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double x = m(i, j).real();
      const double y = m(i, j).imag();
      e[8 * i + j] = x;
      e[8 * (i + 4) + (j + 4)] = x;
      e[8 * i + (j + 4)] = -y;
      e[8 * (i + 4) + j] = y;
    }
  }
  return e;
}

inline Mat8 mul8(const Mat8& x, const Mat8& y) {
  Mat8 r{};
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      const double xik = x[8 * i + k];
      if (xik == 0.0) continue;
      for (int j = 0; j < 8; ++j) {
        r[8 * i + j] += xik * y[8 * k + j];
      }
    }
  }
  return r;
}

inline void require_hermitian(const Hermitian4& m, const char* who) {
  if (hermiticity_residual(m) > 1e-12) {
    throw std::domain_error(std::string(who) + ": matrix is not Hermitian");
  }
}

// Collapses the doubled spectrum of the embedding back to four eigenvalues.
inline std::array<double, 4> collapse_doubled(const std::array<double, 8>& v) {
  return {v[0], v[2], v[4], v[6]};
}

}  // namespace detail

// Eigenvalues of a Hermitian 4x4 matrix, descending, via the real embedding.
inline std::array<double, 4> dense_spectrum(const Hermitian4& m) {
  detail::require_hermitian(m, "dense_spectrum");
  const auto eig = jacobi_eigh<8>(detail::real_embedding(m), 1e-13, 100,
                                  /*with_vectors=*/false);
  return detail::collapse_doubled(eig.values);
}

// Schatten 1-norm (sum of singular values; sum of |eigenvalues| for
// Hermitian input).
inline double trace_norm(const Hermitian4& m) {
  detail::require_hermitian(m, "trace_norm");
  const auto eig = jacobi_eigh<8>(detail::real_embedding(m), 1e-13, 100,
                                  /*with_vectors=*/false);
  double sum = 0.0;
  for (double v : eig.values) sum += std::abs(v);
  return 0.5 * sum;  // embedding doubles every eigenvalue
}

// Generic Wootters concurrence: C = max(0, sqrt(nu1) - sqrt(nu2) - sqrt(nu3)
// - sqrt(nu4)) where nu_k are the eigenvalues of sqrt(rho) rho~ sqrt(rho)
// and rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
inline double wootters_concurrence(const Hermitian4& rho) {
  detail::require_hermitian(rho, "wootters_concurrence");
  if (std::abs(trace(rho) - 1.0) > 1e-10) {
    throw std::domain_error("wootters_concurrence: trace must be 1");
  }

  const auto eig = jacobi_eigh<8>(detail::real_embedding(rho));
  // sqrt(rho) in the embedding: V diag(sqrt(max(lambda, 0))) V^T.
  detail::Mat8 sq{};
  for (int k = 0; k < 8; ++k) {
    const double root = std::sqrt(std::max(0.0, eig.values[k]));
    if (root == 0.0) continue;
    for (int i = 0; i < 8; ++i) {
      const double scaled = root * eig.vectors[8 * i + k];
      for (int j = 0; j < 8; ++j) {
        sq[8 * i + j] += scaled * eig.vectors[8 * j + k];
      }
    }
  }

  const Hermitian4 flip = kron(kSigma2, kSigma2);
  Hermitian4 conj_rho;
  for (int i = 0; i < 16; ++i) conj_rho.a[i] = std::conj(rho.a[i]);
  const Hermitian4 flipped = matmul(matmul(flip, conj_rho), flip);

  const detail::Mat8 inner =
      detail::mul8(detail::mul8(sq, detail::real_embedding(flipped)), sq);
  const auto nu = jacobi_eigh<8>(inner, 1e-13, 100, /*with_vectors=*/false);
  const auto nu4 = detail::collapse_doubled(nu.values);

  double c = std::sqrt(std::max(0.0, nu4[0]));
  for (int k = 1; k < 4; ++k) c -= std::sqrt(std::max(0.0, nu4[k]));
  return std::max(0.0, c);
}

// Explicit four-operator Kraus application with L_ij = sqrt(p_ij)
// sigma_i x sigma_j, i, j in {0, 3}.
inline Hermitian4 kraus_apply(const Hermitian4& m, const KrausProbTable& t) {
  const double sum = t.p00 + t.p03 + t.p30 + t.p33;
  if (std::abs(sum - 1.0) > 1e-12 || t.p00 < -1e-12 || t.p03 < -1e-12 ||
      t.p30 < -1e-12 || t.p33 < -1e-12) {
    throw std::domain_error("kraus_apply: table is not a probability table");
  }
  const struct {
    double weight;
    const Mat2& left;
    const Mat2& right;
  } terms[] = {{t.p00, kSigma0, kSigma0},
               {t.p03, kSigma0, kSigma3},
               {t.p30, kSigma3, kSigma0},
               {t.p33, kSigma3, kSigma3}};
  Hermitian4 out;
  for (const auto& term : terms) {
    if (term.weight == 0.0) continue;
    const Hermitian4 u = kron(term.left, term.right);
    out = out + term.weight * matmul(matmul(u, m), u);
  }
  return out;
}

// Measurement direction on the Bloch sphere of qubit A.
struct MeasurementDirection {
  double polar = 0.0;    // theta in [0, pi]
  double azimuth = 0.0;  // phi in [0, 2 pi)
};

namespace detail {

// rho -> sum_k (Pi_k x 1) rho (Pi_k x 1) for the projectors along n(theta,
// phi); equivalently (rho + U rho U) / 2 with U = (n . sigma) x 1.
inline Hermitian4 measurement_dephased(const Hermitian4& rho,
                                       const MeasurementDirection& d) {
  const double st = std::sin(d.polar);
  const Mat2 n_sigma{complexd{std::cos(d.polar), 0},
                     complexd{st * std::cos(d.azimuth), -st * std::sin(d.azimuth)},
                     complexd{st * std::cos(d.azimuth), st * std::sin(d.azimuth)},
                     complexd{-std::cos(d.polar), 0}};
  const Hermitian4 u = kron(n_sigma, kSigma0);
  return 0.5 * (rho + matmul(matmul(u, rho), u));
}

}  // namespace detail

// Geometric discord by brute force: minimise the trace distance between rho
// and its measurement-dephased image over all von Neumann measurement
// directions on qubit A, via a polar x azimuth grid scan plus an optional
// compass-search refinement.  Returns half the minimal distance, the
// normalisation under which the X-state closed form is reproduced.
inline double gqd_numerical(const Hermitian4& rho, int grid_polar,
                            int grid_azimuth, bool refine) {
  detail::require_hermitian(rho, "gqd_numerical");
  if (grid_polar < 64 || grid_azimuth < 64) {
    throw std::domain_error("gqd_numerical: grid counts must be >= 64");
  }

  const auto distance = [&rho](double polar, double azimuth) {
    return trace_norm(rho -
                      detail::measurement_dephased(rho, {polar, azimuth}));
  };

  constexpr double kPi = 3.14159265358979323846;
  const double dpolar = kPi / (grid_polar - 1);
  const double dazimuth = 2.0 * kPi / grid_azimuth;

  // Row-parallel scan; each slot records the row minimum, then a serial
  // reduction keeps the first (lowest-index) global minimiser.
  struct RowBest {
    double value = 0.0;
    double azimuth = 0.0;
  };
  std::vector<RowBest> rows(static_cast<std::size_t>(grid_polar));
  parallel_for(rows.size(), [&](std::size_t i) {
    const double polar = static_cast<double>(i) * dpolar;
    RowBest best{distance(polar, 0.0), 0.0};
    for (int j = 1; j < grid_azimuth; ++j) {
      const double azimuth = j * dazimuth;
      const double d = distance(polar, azimuth);
      if (d < best.value) best = {d, azimuth};
    }
    rows[i] = best;
  });
  double best_value = rows[0].value;
  MeasurementDirection best_dir{0.0, rows[0].azimuth};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].value < best_value) {
      best_value = rows[i].value;
      best_dir = {static_cast<double>(i) * dpolar, rows[i].azimuth};
    }
  }

  if (refine) {
    // Compass search: halve the step until it is negligible.
    double step = std::max(dpolar, dazimuth);
    while (step > 1e-10) {
      bool moved = false;
      const MeasurementDirection candidates[] = {
          {best_dir.polar + step, best_dir.azimuth},
          {best_dir.polar - step, best_dir.azimuth},
          {best_dir.polar, best_dir.azimuth + step},
          {best_dir.polar, best_dir.azimuth - step}};
      for (const auto& c : candidates) {
        if (c.polar < 0.0 || c.polar > kPi) continue;
        const double d = distance(c.polar, c.azimuth);
        if (d < best_value) {
          best_value = d;
          best_dir = c;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
  }
  return 0.5 * best_value;
}

// Entropic steering functional recomputed from scratch: raw projector
// probabilities in the three Pauli bases, conditional Shannon entropies, and
// the identity F = 6 - 2 sum_i H_i(B|A) linking them to the weight form.
inline SteeringResult entropic_steering_oracle(const Hermitian4& rho) {
  detail::require_hermitian(rho, "entropic_steering_oracle");
  if (std::abs(trace(rho) - 1.0) > 1e-10) {
    throw std::domain_error("entropic_steering_oracle: trace must be 1");
  }

  const Mat2* paulis[] = {&kSigma1, &kSigma2, &kSigma3};
  double sum_b_given_a = 0.0;
  double sum_a_given_b = 0.0;
  for (const Mat2* sigma : paulis) {
    // Projectors (1 +- sigma)/2 on each side.
    Mat2 proj[2];
    for (int s = 0; s < 2; ++s) {
      const double sign = s == 0 ? 1.0 : -1.0;
      for (int k = 0; k < 4; ++k) {
        proj[s][k] = 0.5 * (kSigma0[k] + sign * (*sigma)[k]);
      }
    }
    double joint[2][2];
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        joint[a][b] =
            trace(matmul(rho, kron(proj[a], proj[b]))).real();
      }
    }
    double h_joint = 0.0, h_a = 0.0, h_b = 0.0;
    for (int a = 0; a < 2; ++a) {
      h_a -= detail::xlog2(joint[a][0] + joint[a][1]);
      h_b -= detail::xlog2(joint[0][a] + joint[1][a]);
      for (int b = 0; b < 2; ++b) {
        h_joint -= detail::xlog2(joint[a][b]);
      }
    }
    sum_b_given_a += h_joint - h_a;
    sum_a_given_b += h_joint - h_b;
  }

  SteeringResult r;
  r.f_ab = 6.0 - 2.0 * sum_b_given_a;
  const double f_ba = 6.0 - 2.0 * sum_a_given_b;
  r.s_ab = std::max(0.0, 0.25 * (r.f_ab - 2.0));
  r.s_ba = std::max(0.0, 0.25 * (f_ba - 2.0));
  r.asymmetry = std::abs(r.s_ab - r.s_ba);
  return r;
}

}  // namespace udw
