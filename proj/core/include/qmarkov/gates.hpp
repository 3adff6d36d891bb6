// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qmarkov {

using Complex = std::complex<double>;

/// Small dense square complex matrix, row-major. Dimensions are powers of
/// two: 2x2 for single-qubit gates, 4x4 for controlled gates, larger only
/// as kron() products. Entries are freely writable; unitarity is a property
/// of the named constructors below, checked where an operation needs it.
class GateMatrix {
public:
  /// Zero matrix of the given dimension. Throws std::invalid_argument
  /// unless dim is a power of two.
  explicit GateMatrix(std::size_t dim);

  static GateMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  GateMatrix adjoint() const;

  /// True iff adjoint() * (*this) is the identity to per-entry tolerance.
  bool is_unitary(double tol = 1e-12) const;

private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Parameterized gates take a root exponent t: t = 1/n selects the n-th root
// of the full gate, t = 0 the identity, t = 1 the full gate. Any finite real
// t is valid, and sequential root-X applications on the same qubit compose
// by adding exponents: root_x(s) * root_x(t) == root_x(s + t).

/// (1/sqrt(2)) [[1, 1], [1, -1]].
GateMatrix hadamard();

/// [[0, 1], [1, 0]].
GateMatrix pauli_x();

/// diag(1, e^{i*pi*t}); t = 1 is Z, t = 1/2 is S.
GateMatrix phase_root_z(double t);

/// (1/2) [[1+e, 1-e], [1-e, 1+e]] with e = e^{i*pi*t}. Equals the Hadamard
/// bracketing H * phase_root_z(t) * H; its n-th power at t = 1/n is X.
GateMatrix root_x(double t);

/// Block matrix [[I2, 0], [0, u]] over two qubits; the control is the more
/// significant bit. u must be 2x2 (and unitary for the result to be).
GateMatrix controlled(const GateMatrix& u);

/// Standard matrix product. Throws on dimension mismatch.
GateMatrix mat_mul(const GateMatrix& a, const GateMatrix& b);

/// Kronecker product; dim(a) * dim(b). The left factor occupies the more
/// significant bits, matching the |q0 q1 ...> index convention.
GateMatrix kron(const GateMatrix& a, const GateMatrix& b);

inline GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  return mat_mul(a, b);
}

/// Per-entry absolute comparison.
bool approx_equal(const GateMatrix& a, const GateMatrix& b, double tol);

}  // namespace qmarkov
