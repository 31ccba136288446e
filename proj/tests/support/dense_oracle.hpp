#pragma once

// Brute-force dense-matrix oracle for small n: builds full 2^n x 2^n unitaries
// for Pauli words and gates, independent of the simulator and conjugation
// rules it is used to check.

#include <complex>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/pauli.hpp"

namespace qec::testsupport {

using cplx = std::complex<double>;
using Mat = std::vector<std::vector<cplx>>;

inline Mat zeros(size_t d) { return Mat(d, std::vector<cplx>(d, cplx(0, 0))); }

inline Mat eye(size_t d) {
  Mat m = zeros(d);
  for (size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  size_t d = a.size();
  Mat c = zeros(d);
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (a[i][k] == cplx(0, 0)) continue;
      for (size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Mat dagger(const Mat& a) {
  size_t d = a.size();
  Mat c = zeros(d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

inline Mat kron(const Mat& a, const Mat& b) {
  size_t da = a.size(), db = b.size();
  Mat c = zeros(da * db);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j)
      for (size_t k = 0; k < db; ++k)
        for (size_t l = 0; l < db; ++l) c[i * db + k][j * db + l] = a[i][j] * b[k][l];
  return c;
}

inline bool approx_equal(const Mat& a, const Mat& b, double tol = 1e-12) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
  return true;
}

// Single-qubit letters in the real convention (Y = XZ).
inline Mat letter_matrix(int x, int z) {
  if (!x && !z) return eye(2);
  if (x && !z) return Mat{{0, 1}, {1, 0}};
  if (!x && z) return Mat{{1, 0}, {0, -1}};
  return Mat{{0, -1}, {1, 0}};  // XZ
}

inline Mat pauli_matrix(const PauliWord& p) {
  Mat m = eye(1);
  for (int q = 0; q < p.n; ++q) m = kron(m, letter_matrix(p.x[q], p.z[q]));
  cplx ph = std::pow(cplx(0, 1), p.phase_exp % 4);
  for (auto& row : m)
    for (auto& v : row) v *= ph;
  return m;
}

inline Mat gate_matrix(const Gate& g, int n) {
  size_t d = size_t(1) << n;
  const double rs2 = 1.0 / std::sqrt(2.0);
  auto bit = [&](size_t idx, int q) { return (idx >> (n - 1 - q)) & 1; };
  auto flip = [&](size_t idx, int q) { return idx ^ (size_t(1) << (n - 1 - q)); };
  // Column-by-column construction: image of each basis ket.
  Mat m = zeros(d);
  for (size_t col = 0; col < d; ++col) {
    switch (g.kind) {
      case GateKind::H: {
        size_t lo = col & ~(size_t(1) << (n - 1 - g.q0));
        size_t hi = lo | (size_t(1) << (n - 1 - g.q0));
        if (!bit(col, g.q0)) {
          m[lo][col] += rs2;
          m[hi][col] += rs2;
        } else {
          m[lo][col] += rs2;
          m[hi][col] -= rs2;
        }
        break;
      }
      case GateKind::P:
        m[col][col] = bit(col, g.q0) ? cplx(0, 1) : cplx(1, 0);
        break;
      case GateKind::X:
        m[flip(col, g.q0)][col] = 1;
        break;
      case GateKind::Z:
        m[col][col] = bit(col, g.q0) ? -1 : 1;
        break;
      case GateKind::CNOT:
        m[bit(col, g.q0) ? flip(col, g.q1) : col][col] = 1;
        break;
      case GateKind::CPauli: {
        if (!bit(col, g.q0)) {
          m[col][col] = 1;
        } else {
          switch (g.letter) {
            case PauliLetter::X: m[flip(col, g.q1)][col] = 1; break;
            case PauliLetter::Z: m[col][col] = bit(col, g.q1) ? -1 : 1; break;
            case PauliLetter::Y:  // XZ: |0> -> |1>, |1> -> -|0>
              m[flip(col, g.q1)][col] = bit(col, g.q1) ? -1 : 1;
              break;
          }
        }
        break;
      }
    }
  }
  return m;
}

}  // namespace qec::testsupport
