// SPDX-License-Identifier: Apache-2.0
#include "ft422/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ft422 {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": " + value);
  }
  if (pos != value.size()) throw ConfigError("bad numeric value for " + key + ": " + value);
  return v;
}

long parse_long(const std::string& value, const std::string& key) {
  const double v = parse_double(value, key);
  if (v != std::floor(v)) throw ConfigError("expected an integer for " + key + ": " + value);
  return static_cast<long>(v);
}

std::vector<double> parse_grid(const std::string& value, const std::string& key) {
  std::vector<double> out;
  if (value.rfind("linspace:", 0) == 0) {
    std::stringstream ss(value.substr(9));
    std::string part;
    std::vector<double> args;
    while (std::getline(ss, part, ':')) args.push_back(parse_double(trim(part), key));
    if (args.size() != 3) throw ConfigError(key + ": linspace needs start:stop:count");
    const int count = static_cast<int>(args[2]);
    if (count < 2) throw ConfigError(key + ": linspace count must be >= 2");
    for (int i = 0; i < count; ++i)
      out.push_back(args[0] + (args[1] - args[0]) * i / (count - 1));
    return out;
  }
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_double(trim(part), key));
  if (out.empty()) throw ConfigError(key + ": empty grid");
  return out;
}

int qubit_key_index(const std::string& suffix, const std::string& key) {
  static const char* names[5] = {"d1", "d2", "d3", "d4", "s1"};
  for (int i = 0; i < 5; ++i)
    if (suffix == names[i]) return i;
  throw ConfigError("unknown qubit in key " + key);
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig cfg;
  for (int i = 0; i < 13; ++i) cfg.theta_grid_rad.push_back(std::numbers::pi * i / 12.0);
  for (int i = 0; i < 16; ++i) cfg.t_grid_us.push_back(10.0 * i);
  return cfg;
}

void ExperimentConfig::validate() const {
  try {
    noise.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (shots < 1) throw ConfigError("shots must be >= 1");
  if (theta_grid_rad.empty()) throw ConfigError("sweep grid is empty");
  if (t_grid_us.empty()) throw ConfigError("decay grid is empty");
  if (trotter_slices < 2) throw ConfigError("trotter slices must be >= 2");
  if (tomo_shots_per_setting < 1) throw ConfigError("tomography shots must be >= 1");
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
  ExperimentConfig cfg = ExperimentConfig::defaults();
  std::stringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");

    try {
      if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_long(value, key));
      } else if (key == "shots") {
        cfg.shots = parse_long(value, key);
      } else if (key == "target") {
        cfg.target = PrepTarget::parse(value);
      } else if (key == "out") {
        cfg.out_dir = value;
      } else if (key == "trotter.slices") {
        cfg.trotter_slices = static_cast<int>(parse_long(value, key));
      } else if (key == "tomo.shots_per_setting") {
        cfg.tomo_shots_per_setting = static_cast<int>(parse_long(value, key));
      } else if (key == "sweep.theta_rad") {
        cfg.theta_grid_rad = parse_grid(value, key);
      } else if (key == "decay.t_us") {
        cfg.t_grid_us = parse_grid(value, key);
      } else if (key == "cnot.stark_theta_rad") {
        cfg.noise.stark_theta_rad = parse_double(value, key);
      } else if (key == "gate_time.single_us") {
        cfg.noise.single_gate_us = parse_double(value, key);
      } else if (key == "gate_time.cnot_us") {
        cfg.noise.cnot_gate_us = parse_double(value, key);
      } else if (key == "prep.damping") {
        if (value == "on")
          cfg.noise.damping_during_prep = true;
        else if (value == "off")
          cfg.noise.damping_during_prep = false;
        else
          throw ConfigError("prep.damping must be on or off");
      } else if (key.rfind("t1_us.", 0) == 0) {
        const std::string suffix = key.substr(6);
        const double v = parse_double(value, key);
        if (suffix == "all")
          cfg.noise.t1_us.fill(v);
        else
          cfg.noise.t1_us[static_cast<std::size_t>(qubit_key_index(suffix, key))] = v;
      } else if (key.rfind("readout.p0.", 0) == 0 || key.rfind("readout.p1.", 0) == 0) {
        const bool is_p0 = key[9] == '0';
        const std::string suffix = key.substr(11);
        const double v = parse_double(value, key);
        auto& arr = is_p0 ? cfg.noise.p0 : cfg.noise.p1;
        if (suffix == "all")
          arr.fill(v);
        else
          arr[static_cast<std::size_t>(qubit_key_index(suffix, key))] = v;
      } else if (key.rfind("zz_khz.", 0) == 0) {
        const std::string pair = key.substr(7);
        if (pair.size() != 4) throw ConfigError("bad ZZ pair in key " + key);
        const int a = qubit_key_index(pair.substr(0, 2), key);
        const int b = qubit_key_index(pair.substr(2, 2), key);
        if (a == b) throw ConfigError("ZZ pair must name two distinct qubits: " + key);
        const double v = parse_double(value, key);
        cfg.noise.zz_khz(a, b) = v;
        cfg.noise.zz_khz(b, a) = v;
      } else {
        throw ConfigError("unknown key " + key);
      }
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception& e) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

}  // namespace ft422
