// SPDX-License-Identifier: Apache-2.0
#include "qmarkov/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmarkov {

namespace {

void check_register_width(std::size_t num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw std::out_of_range("register width must be in [1, " +
                            std::to_string(StateVector::kMaxQubits) +
                            "], got " + std::to_string(num_qubits));
  }
}

void check_qubit_index(std::size_t num_qubits, std::size_t qubit) {
  if (qubit >= num_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) +
                            " out of range for " + std::to_string(num_qubits) +
                            "-qubit register");
  }
}

void check_single_qubit_gate(const GateMatrix& gate) {
  if (gate.dim() != 2) {
    throw std::invalid_argument("gate must be 2x2");
  }
}

// Bit of `qubit` within a basis index; qubit 0 is the most significant.
inline std::uint64_t qubit_mask(std::size_t num_qubits, std::size_t qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

// In-place pair update over every (i, i | mask) amplitude pair.
void apply_gate_inplace(std::vector<Complex>& amps, const GateMatrix& gate,
                        std::uint64_t target_mask) {
  const Complex g00 = gate(0, 0), g01 = gate(0, 1);
  const Complex g10 = gate(1, 0), g11 = gate(1, 1);
  const std::uint64_t dim = amps.size();
  for (std::uint64_t base = 0; base < dim; base += target_mask << 1) {
    for (std::uint64_t low = 0; low < target_mask; ++low) {
      const std::uint64_t i0 = base | low;
      const std::uint64_t i1 = i0 | target_mask;
      const Complex a0 = amps[i0];
      const Complex a1 = amps[i1];
      amps[i0] = g00 * a0 + g01 * a1;
      amps[i1] = g10 * a0 + g11 * a1;
    }
  }
}

void apply_controlled_inplace(std::vector<Complex>& amps,
                              const GateMatrix& gate,
                              std::uint64_t control_mask,
                              std::uint64_t target_mask) {
  const Complex g00 = gate(0, 0), g01 = gate(0, 1);
  const Complex g10 = gate(1, 0), g11 = gate(1, 1);
  const std::uint64_t dim = amps.size();
  for (std::uint64_t base = 0; base < dim; base += target_mask << 1) {
    for (std::uint64_t low = 0; low < target_mask; ++low) {
      const std::uint64_t i0 = base | low;
      if (!(i0 & control_mask)) continue;
      const std::uint64_t i1 = i0 | target_mask;
      const Complex a0 = amps[i0];
      const Complex a1 = amps[i1];
      amps[i0] = g00 * a0 + g01 * a1;
      amps[i1] = g10 * a0 + g11 * a1;
    }
  }
}

}  // namespace

StateVector StateVector::from_amplitudes(std::size_t num_qubits,
                                         std::vector<Complex> amplitudes) {
  check_register_width(num_qubits);
  if (amplitudes.size() != (std::uint64_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match register width");
  }
  StateVector state(num_qubits, std::move(amplitudes));
  if (std::abs(state.norm_squared() - 1.0) > 1e-9) {
    throw std::invalid_argument("state is not normalized");
  }
  return state;
}

Complex StateVector::amplitude(std::uint64_t basis_index) const {
  if (basis_index >= size()) {
    throw std::out_of_range("basis index out of range");
  }
  return amps_[basis_index];
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> probs(amps_.size());
  for (std::uint64_t i = 0; i < amps_.size(); ++i) probs[i] = std::norm(amps_[i]);
  return probs;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return sum;
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_register_width(num_qubits);
}

void Circuit::add_single(GateMatrix gate, std::size_t target) {
  check_single_qubit_gate(gate);
  check_qubit_index(num_qubits_, target);
  ops_.push_back({std::move(gate), target, std::nullopt});
}

void Circuit::add_controlled(GateMatrix gate, std::size_t control,
                             std::size_t target) {
  check_single_qubit_gate(gate);
  check_qubit_index(num_qubits_, control);
  check_qubit_index(num_qubits_, target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  ops_.push_back({std::move(gate), target, control});
}

StateVector init_basis(std::size_t num_qubits, std::uint64_t basis_index) {
  check_register_width(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (basis_index >= dim) {
    throw std::out_of_range("basis index out of range");
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[basis_index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector apply_single(const StateVector& state, const GateMatrix& gate,
                         std::size_t target) {
  check_single_qubit_gate(gate);
  check_qubit_index(state.num_qubits(), target);
  StateVector out = state;
  apply_gate_inplace(out.amps_, gate, qubit_mask(state.num_qubits(), target));
  return out;
}

StateVector apply_controlled(const StateVector& state, const GateMatrix& gate,
                             std::size_t control, std::size_t target) {
  check_single_qubit_gate(gate);
  check_qubit_index(state.num_qubits(), control);
  check_qubit_index(state.num_qubits(), target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  StateVector out = state;
  apply_controlled_inplace(out.amps_, gate,
                           qubit_mask(state.num_qubits(), control),
                           qubit_mask(state.num_qubits(), target));
  return out;
}

StateVector run_circuit(const Circuit& circuit, const StateVector& initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw std::invalid_argument("circuit and state register widths differ");
  }
  StateVector state = initial;
  for (const CircuitOp& op : circuit.ops()) {
    if (op.control) {
      state = apply_controlled(state, op.gate, *op.control, op.target);
    } else {
      state = apply_single(state, op.gate, op.target);
    }
  }
  return state;
}

std::vector<std::uint64_t> sample_counts(const StateVector& state,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
  const std::vector<double> probs = state.probabilities();
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::uint64_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  std::vector<std::uint64_t> counts(probs.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    // Top 53 bits of the engine output, mapped to [0, 1). Avoids
    // std::uniform_real_distribution, whose stream is implementation-defined.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    counts[it == cdf.end() ? probs.size() - 1 : it - cdf.begin()] += 1;
  }
  return counts;
}

}  // namespace qmarkov
