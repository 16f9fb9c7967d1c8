#pragma once

#include <cstdint>
#include <string>

#include "cosmobound/cosmology.hpp"
#include "cosmobound/units.hpp"

namespace cosmobound {

/// Effective run configuration: cosmological parameters, constant overrides,
/// and artifact knobs. Loaded from a flat `key = value` file (# comments,
/// UTF-8); unknown keys are hard errors.
struct RunConfig {
    CosmologyParams cosmology;
    ConstantsSet constants;
    double dark_energy_density_J_m3 = 6e-10;
    int qubit_cap = 14;
    std::string format = "text";  // "text" or "json"
    std::uint64_t seed = 0;

    void validate() const;  // RangeViolation naming the offending key
};

/// Parses config text. Throws ParseError (with line and column), UnknownKey,
/// or RangeViolation naming the key.
RunConfig parse_config(const std::string& text);

/// Loads a config file; missing file is a ParseError.
RunConfig load_config(const std::string& path);

/// Round-trippable rendering of the effective config: every key, full
/// precision, stable order.
std::string serialize_config(const RunConfig& config);

}  // namespace cosmobound
