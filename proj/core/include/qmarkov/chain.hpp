// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qmarkov/markov.hpp"
#include "qmarkov/statevector.hpp"

namespace qmarkov {

/// Root-exponent description of a binary-state chain over L qubits.
///
/// The compiled circuit has two stages: first one root-X per qubit
/// (init_exponents[i] on qubit i, setting the unconditional laws), then a
/// cascade of controlled root-X gates, qubit i-1 controlling qubit i
/// (cond_exponents[i-1], shifting the law of variable i when its
/// predecessor is 1).
struct ChainSpec {
  std::size_t length = 0;                // L >= 1
  std::vector<double> init_exponents;    // size L, finite
  std::vector<double> cond_exponents;    // size L - 1, finite

  /// Throws std::invalid_argument on length mismatch or non-finite entries.
  void validate() const;
};

/// Classical chain induced by a ChainSpec: the law of the first variable
/// plus one row-stochastic 2x2 matrix per step.
struct DerivedDtmc {
  DistributionVector initial;                // size 2
  std::vector<TransitionMatrix> transitions; // length - 1 matrices, 2x2
};

/// Full two-stage circuit over L qubits: L single root-X ops, then L-1
/// controlled ops in chain order. Exactly 2L - 1 ops.
Circuit compile_chain(const ChainSpec& spec);

/// Variant without the initialization stage: only the controlled cascade,
/// started from an arbitrary computational basis state.
struct NoInitCircuit {
  Circuit circuit;
  StateVector initial;
  /// True when the basis has qubit 0 and every interior qubit at 0, in
  /// which case no control can ever fire and the circuit is the identity.
  bool degenerate = false;
};
NoInitCircuit compile_chain_no_init(const ChainSpec& spec,
                                    std::uint64_t initial_basis);

/// Exponent t in [0, 1] such that root_x(t)|0> is measured as 1 with
/// probability p; inverts P(1) = sin^2(pi t / 2). Throws outside [0, 1].
double calibrate_root(double p);

/// Conditional exponent u (possibly negative) such that the control-fired
/// branch, carrying total exponent t_init + u, is measured as 1 with
/// probability p_given_1.
double calibrate_conditional(double p_given_1, double t_init);

/// P(first = 1) = sin^2(pi t_0 / 2); step i has T(0, 1) = sin^2(pi t_i / 2)
/// and T(1, 1) = sin^2(pi (t_i + u_i) / 2).
DerivedDtmc chain_to_dtmc(const ChainSpec& spec);

/// Classical chain induced by the no-init variant: variable 0 is pinned to
/// its basis bit; a step copies the target's basis bit when the control is
/// 0 and rotates it by root_x(u) when the control is 1.
DerivedDtmc chain_to_dtmc_no_init(const ChainSpec& spec,
                                  std::uint64_t initial_basis);

/// State of the compiled circuit on |0...0>, built directly from the
/// product form: basis path (x_0 .. x_{L-1}) has amplitude
/// prod_i (1 +- e^{i pi e_i}) / 2, minus for x_i = 1, where qubit i's total
/// exponent e_i is t_i when i = 0 or x_{i-1} = 0, and t_i + u_i when
/// x_{i-1} = 1 (the controlled gate fired in that branch).
StateVector closed_form_state(const ChainSpec& spec);

}  // namespace qmarkov
