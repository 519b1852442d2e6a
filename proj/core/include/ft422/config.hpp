// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ft422/noise.hpp"
#include "ft422/prep.hpp"

namespace ft422 {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Run parameters for the experiment harness. Defaults carry the reference
// device characterization (per-qubit T1 and readout, symmetrized static ZZ).
struct ExperimentConfig {
  NoiseConfig noise = NoiseConfig::device_defaults();
  long shots = 100000;
  std::uint64_t seed = 1234;
  PrepTarget target = PrepTarget::z(1, 1);
  std::vector<double> theta_grid_rad;  // sweep angles
  std::vector<double> t_grid_us;       // decay times
  int trotter_slices = 400;
  int tomo_shots_per_setting = 10000;
  std::string out_dir = "out";

  static ExperimentConfig defaults();
  void validate() const;  // throws ConfigError
};

// Flat key = value format with dotted sections and '#' comments. Unknown keys
// are rejected. Grid values accept either a comma list or
// "linspace:start:stop:count".
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

}  // namespace ft422
