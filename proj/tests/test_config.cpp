// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ft422/config.hpp"
#include "helpers.hpp"

using namespace ft422;

TEST_SUITE("config") {

TEST_CASE("defaults are valid and carry the device characterization") {
  const ExperimentConfig cfg = ExperimentConfig::defaults();
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.noise.t1_us[0] == doctest::Approx(50.4));
  CHECK(cfg.noise.p1[4] == doctest::Approx(0.0088));
  CHECK(cfg.theta_grid_rad.size() == 13);
}

TEST_CASE("parsing a full config") {
  const std::string text =
      "# comment line\n"
      "seed = 99\n"
      "shots = 5000\n"
      "target = X:+-\n"
      "t1_us.all = 60\n"
      "t1_us.d2 = 75\n"
      "readout.p0.all = 0.108\n"
      "readout.p1.all = 0.043\n"
      "zz_khz.d1s1 = -90   # inline comment\n"
      "cnot.stark_theta_rad = 0.05\n"
      "prep.damping = on\n"
      "sweep.theta_rad = 0, 0.5, 1.0\n"
      "decay.t_us = linspace:0:100:11\n"
      "trotter.slices = 150\n"
      "tomo.shots_per_setting = 2000\n"
      "out = results\n";
  const ExperimentConfig cfg = parse_config_text(text);
  CHECK(cfg.seed == 99);
  CHECK(cfg.shots == 5000);
  CHECK(cfg.target.basis == PrepTarget::Basis::x);
  CHECK(cfg.target.second == 1);
  CHECK(cfg.noise.t1_us[0] == 60.0);
  CHECK(cfg.noise.t1_us[1] == 75.0);
  CHECK(cfg.noise.p0[3] == doctest::Approx(0.108));
  CHECK(cfg.noise.zz_khz(0, 4) == doctest::Approx(-90.0));
  CHECK(cfg.noise.zz_khz(4, 0) == doctest::Approx(-90.0));
  CHECK(cfg.noise.stark_theta_rad == doctest::Approx(0.05));
  CHECK(cfg.noise.damping_during_prep);
  CHECK(cfg.theta_grid_rad == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(cfg.t_grid_us.size() == 11);
  CHECK(cfg.t_grid_us.back() == doctest::Approx(100.0));
  CHECK(cfg.trotter_slices == 150);
  CHECK(cfg.tomo_shots_per_setting == 2000);
  CHECK(cfg.out_dir == "results");
}

TEST_CASE("errors carry the offending line") {
  auto message_of = [](const std::string& text) {
    try {
      parse_config_text(text, "test.cfg");
      return std::string();
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("bogus_key = 1\n").find("test.cfg:1") == 0);
  CHECK(message_of("\nshots = abc\n").find("test.cfg:2") == 0);
  CHECK(message_of("zz_khz.d1d1 = 3\n").find("distinct") != std::string::npos);
  CHECK(message_of("prep.damping = yes\n").find("on or off") != std::string::npos);
  CHECK_THROWS_AS(parse_config_text("shots = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("sweep.theta_rad = linspace:0:1:1\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("committed default file matches the built-in defaults") {
  const ExperimentConfig from_file =
      load_config(std::string(FT422_SOURCE_DIR) + "/configs/device_defaults.cfg");
  const ExperimentConfig built_in = ExperimentConfig::defaults();
  for (int q = 0; q < 5; ++q) {
    CHECK(from_file.noise.t1_us[static_cast<std::size_t>(q)] ==
          built_in.noise.t1_us[static_cast<std::size_t>(q)]);
    CHECK(from_file.noise.p0[static_cast<std::size_t>(q)] ==
          built_in.noise.p0[static_cast<std::size_t>(q)]);
    CHECK(from_file.noise.p1[static_cast<std::size_t>(q)] ==
          built_in.noise.p1[static_cast<std::size_t>(q)]);
  }
  CHECK((from_file.noise.zz_khz - built_in.noise.zz_khz).cwiseAbs().maxCoeff() == 0.0);
  CHECK(from_file.shots == built_in.shots);
  CHECK(from_file.seed == built_in.seed);
}

}  // TEST_SUITE
