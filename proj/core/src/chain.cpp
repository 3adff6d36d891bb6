// SPDX-License-Identifier: Apache-2.0
#include "qmarkov/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmarkov {

namespace {

// P(measure 1) after root_x(t) on |0>: |(1 - e^{i pi t}) / 2|^2.
double flip_probability(double t) {
  const double s = std::sin(std::numbers::pi * t / 2.0);
  return s * s;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) +
                                " must be a probability in [0, 1]");
  }
}

TransitionMatrix binary_rows(double p1_from_0, double p1_from_1) {
  TransitionMatrix tm(2);
  tm.at(0, 0) = 1.0 - p1_from_0;
  tm.at(0, 1) = p1_from_0;
  tm.at(1, 0) = 1.0 - p1_from_1;
  tm.at(1, 1) = p1_from_1;
  return tm;
}

std::uint64_t checked_basis(const ChainSpec& spec, std::uint64_t basis) {
  if (basis >= (std::uint64_t{1} << spec.length)) {
    throw std::out_of_range("initial basis index out of range");
  }
  return basis;
}

}  // namespace

void ChainSpec::validate() const {
  if (length < 1) {
    throw std::invalid_argument("chain length must be at least 1");
  }
  if (length > StateVector::kMaxQubits) {
    throw std::invalid_argument("chain length exceeds the register limit of " +
                                std::to_string(StateVector::kMaxQubits));
  }
  if (init_exponents.size() != length) {
    throw std::invalid_argument("expected one initial exponent per variable");
  }
  if (cond_exponents.size() != length - 1) {
    throw std::invalid_argument(
        "expected one conditional exponent per transition");
  }
  for (double t : init_exponents) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("initial exponents must be finite");
    }
  }
  for (double u : cond_exponents) {
    if (!std::isfinite(u)) {
      throw std::invalid_argument("conditional exponents must be finite");
    }
  }
}

Circuit compile_chain(const ChainSpec& spec) {
  spec.validate();
  Circuit circuit(spec.length);
  for (std::size_t q = 0; q < spec.length; ++q) {
    circuit.add_single(root_x(spec.init_exponents[q]), q);
  }
  for (std::size_t q = 0; q + 1 < spec.length; ++q) {
    circuit.add_controlled(root_x(spec.cond_exponents[q]), q, q + 1);
  }
  return circuit;
}

NoInitCircuit compile_chain_no_init(const ChainSpec& spec,
                                    std::uint64_t initial_basis) {
  spec.validate();
  checked_basis(spec, initial_basis);
  Circuit circuit(spec.length);
  for (std::size_t q = 0; q + 1 < spec.length; ++q) {
    circuit.add_controlled(root_x(spec.cond_exponents[q]), q, q + 1);
  }
  // Only the last qubit is never a control; if every other bit is 0 the
  // cascade cannot start and the state passes through unchanged.
  bool degenerate = true;
  for (std::size_t q = 0; q + 1 < spec.length; ++q) {
    if (initial_basis & (std::uint64_t{1} << (spec.length - 1 - q))) {
      degenerate = false;
      break;
    }
  }
  return {std::move(circuit), init_basis(spec.length, initial_basis),
          degenerate};
}

double calibrate_root(double p) {
  check_probability(p, "target probability");
  const double t = 2.0 / std::numbers::pi * std::asin(std::sqrt(p));
  return std::clamp(t, 0.0, 1.0);
}

double calibrate_conditional(double p_given_1, double t_init) {
  check_probability(p_given_1, "target probability");
  if (!std::isfinite(t_init)) {
    throw std::invalid_argument("t_init must be finite");
  }
  return calibrate_root(p_given_1) - t_init;
}

DerivedDtmc chain_to_dtmc(const ChainSpec& spec) {
  spec.validate();
  DerivedDtmc dtmc;
  const double p1 = flip_probability(spec.init_exponents[0]);
  dtmc.initial.probs = {1.0 - p1, p1};
  for (std::size_t i = 1; i < spec.length; ++i) {
    const double t = spec.init_exponents[i];
    const double u = spec.cond_exponents[i - 1];
    dtmc.transitions.push_back(
        binary_rows(flip_probability(t), flip_probability(t + u)));
  }
  return dtmc;
}

DerivedDtmc chain_to_dtmc_no_init(const ChainSpec& spec,
                                  std::uint64_t initial_basis) {
  spec.validate();
  checked_basis(spec, initial_basis);
  const auto bit = [&](std::size_t q) {
    return (initial_basis >> (spec.length - 1 - q)) & 1u;
  };
  DerivedDtmc dtmc;
  dtmc.initial.probs = {bit(0) ? 0.0 : 1.0, bit(0) ? 1.0 : 0.0};
  for (std::size_t i = 1; i < spec.length; ++i) {
    const double u = spec.cond_exponents[i - 1];
    // Control 0: the target keeps its basis bit. Control 1: root_x(u) is
    // applied to |bit>, so P(1) is the flip probability from |0> and its
    // complement from |1>.
    const double stay = bit(i) ? 1.0 : 0.0;
    const double fired =
        bit(i) ? 1.0 - flip_probability(u) : flip_probability(u);
    dtmc.transitions.push_back(binary_rows(stay, fired));
  }
  return dtmc;
}

StateVector closed_form_state(const ChainSpec& spec) {
  spec.validate();
  const std::uint64_t dim = std::uint64_t{1} << spec.length;
  std::vector<Complex> amps(dim);
  for (std::uint64_t basis = 0; basis < dim; ++basis) {
    Complex amp{1.0, 0.0};
    std::uint64_t prev = 0;
    for (std::size_t q = 0; q < spec.length; ++q) {
      const std::uint64_t x = (basis >> (spec.length - 1 - q)) & 1u;
      double exponent = spec.init_exponents[q];
      if (q > 0 && prev == 1) exponent += spec.cond_exponents[q - 1];
      const Complex e = std::polar(1.0, std::numbers::pi * exponent);
      amp *= (x == 0 ? 1.0 + e : 1.0 - e) / 2.0;
      prev = x;
    }
    amps[basis] = amp;
  }
  return StateVector::from_amplitudes(spec.length, std::move(amps));
}

}  // namespace qmarkov
