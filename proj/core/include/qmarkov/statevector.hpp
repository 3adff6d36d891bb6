// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmarkov/gates.hpp"

namespace qmarkov {

/// Dense register of k qubits: 2^k complex amplitudes with unit norm.
///
/// Bit convention used everywhere in this project: qubit 0 is the MOST
/// significant bit of the basis index, so for three qubits |q0 q1 q2> =
/// |100> sits at index 4, and the bit string printed for index i is just
/// i in binary, q0 first.
///
/// States are immutable values: gate application returns a new state. They
/// are safe to share across threads once constructed.
class StateVector {
public:
  static constexpr std::size_t kMaxQubits = 30;

  /// Builds a state from raw amplitudes (size must be a power of two
  /// matching num_qubits; norm must be 1 within 1e-9).
  static StateVector from_amplitudes(std::size_t num_qubits,
                                     std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint64_t size() const { return std::uint64_t{1} << num_qubits_; }

  /// Range-checked amplitude lookup.
  Complex amplitude(std::uint64_t basis_index) const;
  const std::vector<Complex>& amplitudes() const { return amps_; }

  /// |a_i|^2 per basis state; sums to 1 within fp error.
  std::vector<double> probabilities() const;
  double norm_squared() const;

private:
  StateVector(std::size_t num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  friend StateVector init_basis(std::size_t, std::uint64_t);
  friend StateVector apply_single(const StateVector&, const GateMatrix&,
                                  std::size_t);
  friend StateVector apply_controlled(const StateVector&, const GateMatrix&,
                                      std::size_t, std::size_t);

  std::size_t num_qubits_;
  std::vector<Complex> amps_;
};

/// Ordered list of gate applications over a fixed-width register. Each op
/// is a 2x2 gate on a target qubit, optionally conditioned on a control.
struct CircuitOp {
  GateMatrix gate;
  std::size_t target;
  std::optional<std::size_t> control;
};

class Circuit {
public:
  explicit Circuit(std::size_t num_qubits);

  /// Index bounds and control != target are checked on insertion.
  void add_single(GateMatrix gate, std::size_t target);
  void add_controlled(GateMatrix gate, std::size_t control, std::size_t target);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }

private:
  std::size_t num_qubits_;
  std::vector<CircuitOp> ops_;
};

/// Computational basis state |basis_index> over num_qubits qubits.
StateVector init_basis(std::size_t num_qubits, std::uint64_t basis_index);

/// Applies a 2x2 gate to one qubit by in-pair updates: O(2^k) work, no
/// expanded operator is materialized.
StateVector apply_single(const StateVector& state, const GateMatrix& gate,
                         std::size_t target);

/// Applies a 2x2 gate to the target only where the control bit is 1.
StateVector apply_controlled(const StateVector& state, const GateMatrix& gate,
                             std::size_t control, std::size_t target);

/// Applies ops in list order.
StateVector run_circuit(const Circuit& circuit, const StateVector& initial);

/// Multinomial shot sampling; one count per basis state, summing to shots.
/// Fully deterministic for a given seed.
std::vector<std::uint64_t> sample_counts(const StateVector& state,
                                         std::uint64_t shots,
                                         std::uint64_t seed);

}  // namespace qmarkov
