#pragma once

// Run configuration for the mevac command line tool.
//
// The config file is JSON with the nested keys below. Unknown keys anywhere
// are rejected.
//
//   {
//     "material": {"epsilon": 2.25, "mu": 1.0, "chi": [9 numbers, row-major], "rho0": 1.0},
//     "boost":    {"beta": 0.01},
//     "fields":   {"E": [x, y, z], "B": [x, y, z]},
//     "vacuum":   {"grid_n": 8, "cutoff": 1e5, "volume": 1.0},
//     "sweep":    {"parameter": "beta" | "cutoff" | "grid_n", "values": [...]}
//   }
//
// Only "material" (with epsilon and mu) is mandatory; chi defaults to zero
// and rho0 to 1.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mevac/algebra.hpp"

namespace mevac::cli {

/// Malformed or inconsistent configuration; the message names the line or
/// the dotted key path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaterialConfig {
  double epsilon = 1.0;
  double mu = 1.0;
  std::array<double, 9> chi{};
  double rho0 = 1.0;
};

struct BoostConfig {
  double beta = 0.0;
};

struct FieldsConfig {
  std::array<double, 3> E{};
  std::array<double, 3> B{};
};

struct VacuumConfig {
  int grid_n = 8;
  double cutoff = 1e5;
  double volume = 1.0;
};

struct SweepConfig {
  std::string parameter;
  std::vector<double> values;
};

struct RunConfig {
  MaterialConfig material;
  std::optional<BoostConfig> boost;
  std::optional<FieldsConfig> fields;
  std::optional<VacuumConfig> vacuum;
  std::optional<SweepConfig> sweep;
};

RunConfig parse_config(std::string_view text);
RunConfig config_from_json(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Inverse of parse_config; numbers are stored unchanged so a dump/parse
/// cycle is bit-exact.
nlohmann::json to_json(const RunConfig& cfg);

/// Domain objects; InvalidArgument from the library is rethrown as ConfigError.
Materiald make_material(const RunConfig& cfg);
FieldStated make_fields(const RunConfig& cfg);

}  // namespace mevac::cli
