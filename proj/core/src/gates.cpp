// SPDX-License-Identifier: Apache-2.0
#include "qmarkov/gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmarkov {

GateMatrix::GateMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("GateMatrix dimension must be a power of two");
  }
}

GateMatrix GateMatrix::identity(std::size_t dim) {
  GateMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

bool GateMatrix::is_unitary(double tol) const {
  const GateMatrix product = mat_mul(adjoint(), *this);
  return approx_equal(product, identity(dim_), tol);
}

GateMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  GateMatrix h(2);
  h(0, 0) = s;
  h(0, 1) = s;
  h(1, 0) = s;
  h(1, 1) = -s;
  return h;
}

GateMatrix pauli_x() {
  GateMatrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

GateMatrix phase_root_z(double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("phase_root_z: exponent must be finite");
  }
  GateMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, std::numbers::pi * t);
  return m;
}

GateMatrix root_x(double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("root_x: exponent must be finite");
  }
  const Complex e = std::polar(1.0, std::numbers::pi * t);
  const Complex plus = (1.0 + e) / 2.0;
  const Complex minus = (1.0 - e) / 2.0;
  GateMatrix m(2);
  m(0, 0) = plus;
  m(0, 1) = minus;
  m(1, 0) = minus;
  m(1, 1) = plus;
  return m;
}

GateMatrix controlled(const GateMatrix& u) {
  if (u.dim() != 2) {
    throw std::invalid_argument("controlled: gate must be 2x2");
  }
  GateMatrix m = GateMatrix::identity(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(2 + r, 2 + c) = u(r, c);
  return m;
}

GateMatrix mat_mul(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  const std::size_t n = a.dim();
  GateMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

GateMatrix kron(const GateMatrix& a, const GateMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  GateMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca)
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb)
          out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

bool approx_equal(const GateMatrix& a, const GateMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (std::abs(a(r, c) - b(r, c)) > tol) return false;
  return true;
}

}  // namespace qmarkov
