// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qmarkov/chain.hpp"

namespace qmarkov {

/// OpenQASM 2.0 program text for the chain circuit. Root-X gates are
/// emitted through their phase-gate decomposition, h; u1(pi*t); h on the
/// target (cu1 for the controlled form), followed by one measurement per
/// qubit. When initial_basis is set, the no-init variant is emitted: x
/// gates prepare the basis state and the initialization stage is dropped.
/// Output is deterministic byte for byte for a given input.
std::string export_qasm(const ChainSpec& spec,
                        std::optional<std::uint64_t> initial_basis = std::nullopt);

}  // namespace qmarkov
