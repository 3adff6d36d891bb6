// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "qmarkov/chain.hpp"

namespace qmarkov {

/// Raised by the config loader. The kind separates unreadable input and
/// malformed JSON (io/parse) from structurally valid but inconsistent
/// documents (schema), so callers can map them to distinct exit statuses.
class ConfigError : public std::runtime_error {
public:
  enum class Kind { io, parse, schema };

  ConfigError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// One simulation job, as described by a JSON config document:
///
///   {
///     "length": 3,
///     "exponents": { "init": [0.5, 0.5, 0.5], "cond": [0.0, 0.0] },
///     // ... or instead of "exponents":
///     "probabilities": {
///       "initial_p1": 0.5,
///       "transitions": [ { "p1_given_0": 0.5, "p1_given_1": 0.5 }, ... ]
///     },
///     "initial_basis": "100",   // optional: no-initialization variant
///     "shots": 1024,            // optional
///     "seed": 7                 // optional
///   }
///
/// Exactly one of "exponents"/"probabilities" must be present; probability
/// entries are calibrated to exponents on load. "initial_basis" selects the
/// no-init circuit, takes conditional exponents only, and forbids the
/// probabilities form and "init".
struct ChainConfig {
  ChainSpec spec;
  std::optional<std::uint64_t> initial_basis;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
};

ChainConfig parse_chain_config(const std::string& json_text);
ChainConfig load_chain_config(const std::filesystem::path& path);

/// Runs the configured pipeline: compile_chain on |0...0>, or the no-init
/// cascade when initial_basis is set.
StateVector simulate_config(const ChainConfig& config);

/// Classical counterpart of simulate_config.
DerivedDtmc config_dtmc(const ChainConfig& config);

}  // namespace qmarkov
