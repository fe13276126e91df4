#pragma once

// JSON front ends for probe configurations and map specifications.  Every
// parse failure is a ParseError naming the offending field.

#include <json.hpp>
#include <string>

#include "symprod/holomap.hpp"
#include "symprod/probes.hpp"

namespace symprod {

/// {"kind": "polynomial", "coeffs": [[re, im], ...]} (ascending), and likewise
/// blaschke {zeros, factor}, power_law {beta, base}, identity, constant {value},
/// compose {outer, inner}.
HoloMap holomap_from_json(const nlohmann::json& j, const std::string& field = "phi");

struct LipschitzConfig {
  cplx a;
  cplx b;
  std::vector<double> t_values{1e-2, 1e-3, 1e-4};
  double margin = 1e-12;
};

struct SmoothnessConfig {
  int m = 1;
  int n = 2;
  double beta = 0.5;
  std::vector<double> w_grid;
  SmoothnessOptions options;
};

LipschitzConfig lipschitz_config_from_json(const nlohmann::json& j);
SmoothnessConfig smoothness_config_from_json(const nlohmann::json& j);

/// A relative "domain_path" is resolved against base_dir.
SweepConfig sweep_config_from_json(const nlohmann::json& j, const std::string& base_dir = ".");

nlohmann::json read_json_file(const std::string& path);

/// Evenly spaced grid; the default smoothness grid when none is given.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace symprod
