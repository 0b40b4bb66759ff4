#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>

// Cyclic Jacobi eigensolver for small dense real symmetric matrices.  Used by
// the oracle layer, where matrices never exceed 8x8 (the real embedding of a
// 4x4 complex Hermitian matrix), so a fixed-size, dependency-free solver is
// both sufficient and easy to audit.

namespace udw {

template <std::size_t N>
struct JacobiResult {
  std::array<double, N> values{};       // eigenvalues, descending
  std::array<double, N * N> vectors{};  // column k (row-major) pairs values[k]
  int sweeps = 0;
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const std::array<double, N * N>& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < N; ++p) {
    for (std::size_t q = p + 1; q < N; ++q) {
      sum += 2.0 * a[p * N + q] * a[p * N + q];
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

// Diagonalises a symmetric matrix (row-major) by cyclic Jacobi rotations.
// Convergence is declared when the off-diagonal Frobenius norm drops below
// off_tol; failure to converge within max_sweeps sweeps is an error rather
// than a silent degradation.
template <std::size_t N>
JacobiResult<N> jacobi_eigh(std::array<double, N * N> a, double off_tol = 1e-13,
                            int max_sweeps = 100, bool with_vectors = true) {
  auto at = [&a](std::size_t i, std::size_t j) -> double& { return a[i * N + j]; };

  JacobiResult<N> result;
  auto& v = result.vectors;
  if (with_vectors) {
    for (std::size_t i = 0; i < N; ++i) {
      v[i * N + i] = 1.0;
    }
  }

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm<N>(a) <= off_tol) {
      break;
    }
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) {
          continue;
        }
        // sym_schur2: choose the rotation angle that annihilates a_pq.
        const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = at(p, p);
        const double aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
          if (i == p || i == q) {
            continue;
          }
          const double aip = at(i, p);
          const double aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(p, i) = at(i, p);
          at(i, q) = s * aip + c * aiq;
          at(q, i) = at(i, q);
        }
        if (with_vectors) {
          for (std::size_t i = 0; i < N; ++i) {
            const double vip = v[i * N + p];
            const double viq = v[i * N + q];
            v[i * N + p] = c * vip - s * viq;
            v[i * N + q] = s * vip + c * viq;
          }
        }
      }
    }
  }
  if (detail::off_diagonal_norm<N>(a) > off_tol) {
    throw std::runtime_error("jacobi_eigh: no convergence within sweep budget");
  }
  result.sweeps = sweep;

  // Sort eigenpairs by descending eigenvalue with deterministic tie-breaking.
  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < N; ++j) {
      if (a[order[j] * N + order[j]] > a[order[best] * N + order[best]]) {
        best = j;
      }
    }
    std::swap(order[i], order[best]);
  }
  std::array<double, N * N> sorted_vectors{};
  for (std::size_t k = 0; k < N; ++k) {
    result.values[k] = a[order[k] * N + order[k]];
    if (with_vectors) {
      for (std::size_t i = 0; i < N; ++i) {
        sorted_vectors[i * N + k] = v[i * N + order[k]];
      }
    }
  }
  if (with_vectors) {
    result.vectors = sorted_vectors;
  }
  return result;
}

}  // namespace udw
