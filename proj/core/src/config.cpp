// SPDX-License-Identifier: Apache-2.0
#include "qmarkov/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qmarkov {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw ConfigError(ConfigError::Kind::schema, "config: " + what);
}

double get_probability(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number()) {
    schema_error("missing numeric field \"" + key + "\"");
  }
  const double p = j[key].get<double>();
  if (!(p >= 0.0 && p <= 1.0)) {
    schema_error("\"" + key + "\" = " + std::to_string(p) +
                 " is outside [0, 1]");
  }
  return p;
}

std::vector<double> get_exponent_array(const json& j, const std::string& key,
                                       std::size_t expected) {
  if (!j.contains(key)) {
    schema_error("missing \"" + key + "\" array");
  }
  const json& arr = j[key];
  if (!arr.is_array()) {
    schema_error("\"" + key + "\" must be an array");
  }
  if (arr.size() != expected) {
    schema_error("\"" + key + "\" has " + std::to_string(arr.size()) +
                 " entries, expected " + std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) schema_error("\"" + key + "\" entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::uint64_t get_count(const json& j, const std::string& key) {
  const json& v = j[key];
  if (!v.is_number_unsigned()) {
    schema_error("\"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint64_t parse_basis_string(const std::string& bits, std::size_t length) {
  if (bits.size() != length) {
    schema_error("\"initial_basis\" must have exactly " +
                 std::to_string(length) + " bits");
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      schema_error("\"initial_basis\" must contain only '0' and '1'");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return index;
}

}  // namespace

ChainConfig parse_chain_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigError::Kind::parse,
                      std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("document must be a JSON object");

  if (!doc.contains("length") || !doc["length"].is_number_unsigned()) {
    schema_error("missing positive integer \"length\"");
  }
  const std::size_t length = doc["length"].get<std::size_t>();
  if (length < 1 || length > StateVector::kMaxQubits) {
    schema_error("\"length\" must be in [1, " +
                 std::to_string(StateVector::kMaxQubits) + "]");
  }

  const bool has_exponents = doc.contains("exponents");
  const bool has_probabilities = doc.contains("probabilities");
  if (has_exponents == has_probabilities) {
    schema_error("exactly one of \"exponents\"/\"probabilities\" is required");
  }

  ChainConfig config;
  config.spec.length = length;

  if (doc.contains("initial_basis")) {
    if (!doc["initial_basis"].is_string()) {
      schema_error("\"initial_basis\" must be a bit string");
    }
    config.initial_basis =
        parse_basis_string(doc["initial_basis"].get<std::string>(), length);
  }

  if (has_exponents) {
    const json& exp = doc["exponents"];
    if (!exp.is_object()) schema_error("\"exponents\" must be an object");
    if (config.initial_basis) {
      if (exp.contains("init")) {
        schema_error(
            "\"init\" exponents have no effect with \"initial_basis\"; "
            "the no-init circuit applies conditional gates only");
      }
      config.spec.init_exponents.assign(length, 0.0);
    } else {
      config.spec.init_exponents = get_exponent_array(exp, "init", length);
    }
    if (length == 1 && !exp.contains("cond")) {
      config.spec.cond_exponents.clear();
    } else {
      config.spec.cond_exponents = get_exponent_array(exp, "cond", length - 1);
    }
  } else {
    if (config.initial_basis) {
      schema_error(
          "\"probabilities\" cannot be combined with \"initial_basis\"; "
          "use conditional exponents");
    }
    const json& prob = doc["probabilities"];
    if (!prob.is_object()) schema_error("\"probabilities\" must be an object");
    config.spec.init_exponents.push_back(
        calibrate_root(get_probability(prob, "initial_p1")));
    const bool has_transitions = prob.contains("transitions");
    if (length > 1 || has_transitions) {
      if (!has_transitions || !prob["transitions"].is_array()) {
        schema_error("missing \"transitions\" array");
      }
      const json& transitions = prob["transitions"];
      if (transitions.size() != length - 1) {
        schema_error("\"transitions\" has " +
                     std::to_string(transitions.size()) +
                     " entries, expected " + std::to_string(length - 1));
      }
      for (const json& tr : transitions) {
        if (!tr.is_object()) {
          schema_error("\"transitions\" entries must be objects");
        }
        const double t = calibrate_root(get_probability(tr, "p1_given_0"));
        const double u =
            calibrate_conditional(get_probability(tr, "p1_given_1"), t);
        config.spec.init_exponents.push_back(t);
        config.spec.cond_exponents.push_back(u);
      }
    }
  }

  if (doc.contains("shots")) {
    config.shots = get_count(doc, "shots");
    if (*config.shots == 0) schema_error("\"shots\" must be positive");
  }
  if (doc.contains("seed")) config.seed = get_count(doc, "seed");

  try {
    config.spec.validate();
  } catch (const std::exception& e) {
    schema_error(e.what());
  }
  return config;
}

ChainConfig load_chain_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(ConfigError::Kind::io,
                      "cannot read config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ConfigError(ConfigError::Kind::io,
                      "error while reading config file: " + path.string());
  }
  return parse_chain_config(buffer.str());
}

StateVector simulate_config(const ChainConfig& config) {
  if (config.initial_basis) {
    const NoInitCircuit no_init =
        compile_chain_no_init(config.spec, *config.initial_basis);
    return run_circuit(no_init.circuit, no_init.initial);
  }
  return run_circuit(compile_chain(config.spec),
                     init_basis(config.spec.length, 0));
}

DerivedDtmc config_dtmc(const ChainConfig& config) {
  if (config.initial_basis) {
    return chain_to_dtmc_no_init(config.spec, *config.initial_basis);
  }
  return chain_to_dtmc(config.spec);
}

}  // namespace qmarkov
