// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "qmarkov/gates.hpp"
#include "test_util.hpp"

using namespace qmarkov;

namespace {

bool near(Complex a, Complex b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("hadamard matches its closed form and is self-inverse") {
  const GateMatrix h = hadamard();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(near(h(0, 0), s, 1e-15));
  CHECK(near(h(0, 1), s, 1e-15));
  CHECK(near(h(1, 0), s, 1e-15));
  CHECK(near(h(1, 1), -s, 1e-15));
  CHECK(approx_equal(h * h, GateMatrix::identity(2), 1e-12));
  CHECK(h.is_unitary());
}

TEST_CASE("pauli_x is the bit flip") {
  const GateMatrix x = pauli_x();
  CHECK(near(x(0, 0), 0.0, 0.0));
  CHECK(near(x(0, 1), 1.0, 0.0));
  CHECK(near(x(1, 0), 1.0, 0.0));
  CHECK(near(x(1, 1), 0.0, 0.0));
  CHECK(approx_equal(x * x, GateMatrix::identity(2), 1e-15));
  CHECK(approx_equal(x, root_x(1.0), 1e-15));
}

TEST_CASE("phase_root_z special cases") {
  CHECK(approx_equal(phase_root_z(0.0), GateMatrix::identity(2), 1e-15));

  const GateMatrix z = phase_root_z(1.0);
  CHECK(near(z(0, 0), 1.0, 1e-15));
  CHECK(near(z(1, 1), -1.0, 1e-15));
  CHECK(near(z(0, 1), 0.0, 0.0));

  const GateMatrix s = phase_root_z(0.5);
  CHECK(near(s(1, 1), Complex{0.0, 1.0}, 1e-15));

  CHECK_THROWS_AS(phase_root_z(std::nan("")), std::invalid_argument);
}

TEST_CASE("root_x special cases") {
  CHECK(approx_equal(root_x(0.0), GateMatrix::identity(2), 1e-15));
  CHECK(approx_equal(root_x(1.0), pauli_x(), 1e-15));

  const GateMatrix sq = root_x(0.5);
  CHECK(near(sq(0, 0), Complex{0.5, 0.5}, 1e-15));
  CHECK(near(sq(0, 1), Complex{0.5, -0.5}, 1e-15));
  CHECK(near(sq(1, 0), Complex{0.5, -0.5}, 1e-15));
  CHECK(near(sq(1, 1), Complex{0.5, 0.5}, 1e-15));

  CHECK_THROWS_AS(root_x(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("controlled block embedding") {
  const GateMatrix csx = controlled(root_x(0.5));
  CHECK(near(csx(0, 0), 1.0, 0.0));
  CHECK(near(csx(1, 1), 1.0, 0.0));
  CHECK(near(csx(0, 1), 0.0, 0.0));
  CHECK(near(csx(2, 3), Complex{0.5, -0.5}, 1e-15));
  CHECK(near(csx(3, 2), Complex{0.5, -0.5}, 1e-15));
  CHECK(near(csx(2, 2), Complex{0.5, 0.5}, 1e-15));
  CHECK(near(csx(3, 3), Complex{0.5, 0.5}, 1e-15));

  GateMatrix cnot_expected(4);
  cnot_expected(0, 0) = 1.0;
  cnot_expected(1, 1) = 1.0;
  cnot_expected(2, 3) = 1.0;
  cnot_expected(3, 2) = 1.0;
  CHECK(approx_equal(controlled(pauli_x()), cnot_expected, 1e-15));

  CHECK(approx_equal(controlled(GateMatrix::identity(2)),
                     GateMatrix::identity(4), 1e-15));

  CHECK_THROWS_AS(controlled(GateMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("mat_mul product sequence and errors") {
  const GateMatrix h = hadamard();
  CHECK(approx_equal(mat_mul(h, h), GateMatrix::identity(2), 1e-12));
  CHECK(approx_equal(mat_mul(h, mat_mul(phase_root_z(0.5), h)), root_x(0.5),
                     1e-12));
  CHECK(approx_equal(mat_mul(pauli_x(), GateMatrix::identity(2)), pauli_x(),
                     1e-15));
  CHECK_THROWS_AS(mat_mul(h, GateMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("kron dimensions and action") {
  CHECK(approx_equal(kron(GateMatrix::identity(2), GateMatrix::identity(2)),
                     GateMatrix::identity(4), 1e-15));

  // X on the high qubit: |00> -> |10>, i.e. column 0 has its 1 at row 2.
  const GateMatrix xi = kron(pauli_x(), GateMatrix::identity(2));
  CHECK(near(xi(2, 0), 1.0, 0.0));
  CHECK(near(xi(0, 0), 0.0, 0.0));
  CHECK(near(xi(3, 1), 1.0, 0.0));

  // H (x) H sends |00> to the uniform superposition.
  const GateMatrix hh = kron(hadamard(), hadamard());
  CHECK(hh.dim() == 4);
  for (std::size_t r = 0; r < 4; ++r) CHECK(near(hh(r, 0), 0.5, 1e-15));
}

TEST_CASE("constructors are unitary across the exponent range") {
  for (double t = -2.0; t <= 2.0 + 1e-9; t += 0.17) {
    CAPTURE(t);
    CHECK(phase_root_z(t).is_unitary(1e-12));
    CHECK(root_x(t).is_unitary(1e-12));
    CHECK(controlled(root_x(t)).is_unitary(1e-12));
  }
  CHECK(hadamard().is_unitary(1e-12));
  CHECK(pauli_x().is_unitary(1e-12));
}

TEST_CASE("hadamard bracketing turns phase rotation into x rotation") {
  const GateMatrix h = hadamard();
  for (double t = -2.0; t <= 2.0 + 1e-9; t += 0.05) {
    CAPTURE(t);
    CHECK(approx_equal(h * phase_root_z(t) * h, root_x(t), 1e-12));
  }
}

TEST_CASE("n-fold product of the n-th root is the full flip") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    const GateMatrix root = root_x(1.0 / n);
    GateMatrix acc = GateMatrix::identity(2);
    for (int i = 0; i < n; ++i) acc = mat_mul(acc, root);
    CHECK(approx_equal(acc, pauli_x(), 1e-10));
  }
}

TEST_CASE("sequential x rotations add exponents") {
  std::mt19937_64 rng(0x6d61726b6f76ull);
  for (int i = 0; i < 50; ++i) {
    const double s = test::uniform(rng, -2.0, 2.0);
    const double t = test::uniform(rng, -2.0, 2.0);
    CAPTURE(s);
    CAPTURE(t);
    CHECK(approx_equal(root_x(s) * root_x(t), root_x(s + t), 1e-12));
  }
}

TEST_CASE("root_x columns carry the amplitude pair for |0> and |1> inputs") {
  for (int n = 1; n <= 12; ++n) {
    const GateMatrix g = root_x(1.0 / n);
    const Complex e = std::polar(1.0, std::numbers::pi / n);
    const Complex plus = (1.0 + e) / 2.0;
    const Complex minus = (1.0 - e) / 2.0;
    CAPTURE(n);
    // Column 0: starting from |0>; column 1 is the swapped pair.
    CHECK(near(g(0, 0), plus, 1e-15));
    CHECK(near(g(1, 0), minus, 1e-15));
    CHECK(near(g(0, 1), minus, 1e-15));
    CHECK(near(g(1, 1), plus, 1e-15));
    // The pair always describes a distribution.
    CHECK(std::norm(plus) + std::norm(minus) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("GateMatrix rejects non-power-of-two dimensions") {
  CHECK_THROWS_AS(GateMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(GateMatrix(3), std::invalid_argument);
  CHECK_NOTHROW(GateMatrix(8));
}
