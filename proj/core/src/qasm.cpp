// SPDX-License-Identifier: Apache-2.0
#include "qmarkov/qasm.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qmarkov {

namespace {

// Shortest-form decimal, e.g. "0.5", "1", "0.333333333333". Parenthesized
// when negative so the emitted "pi*(-0.5)" stays inside the OpenQASM 2.0
// expression grammar.
std::string qasm_number(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  if (value < 0.0) s = "(" + s + ")";
  return s;
}

}  // namespace

std::string export_qasm(const ChainSpec& spec,
                        std::optional<std::uint64_t> initial_basis) {
  spec.validate();
  if (initial_basis && *initial_basis >= (std::uint64_t{1} << spec.length)) {
    throw std::out_of_range("initial basis index out of range");
  }

  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << spec.length << "];\n";
  out << "creg c[" << spec.length << "];\n";

  if (initial_basis) {
    for (std::size_t q = 0; q < spec.length; ++q) {
      if (*initial_basis & (std::uint64_t{1} << (spec.length - 1 - q))) {
        out << "x q[" << q << "];\n";
      }
    }
  } else {
    for (std::size_t q = 0; q < spec.length; ++q) {
      out << "h q[" << q << "];\n";
      out << "u1(pi*" << qasm_number(spec.init_exponents[q]) << ") q[" << q
          << "];\n";
      out << "h q[" << q << "];\n";
    }
  }

  for (std::size_t q = 0; q + 1 < spec.length; ++q) {
    out << "h q[" << q + 1 << "];\n";
    out << "cu1(pi*" << qasm_number(spec.cond_exponents[q]) << ") q[" << q
        << "],q[" << q + 1 << "];\n";
    out << "h q[" << q + 1 << "];\n";
  }

  for (std::size_t q = 0; q < spec.length; ++q) {
    out << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return out.str();
}

}  // namespace qmarkov
