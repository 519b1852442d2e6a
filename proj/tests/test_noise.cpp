// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ft422/analytic.hpp"
#include "ft422/gates.hpp"
#include "ft422/noise.hpp"
#include "ft422/pipelines.hpp"
#include "helpers.hpp"

using namespace ft422;
using namespace ft422::testing;

TEST_SUITE("noise") {

TEST_CASE("damping parameter") {
  CHECK(damping_gamma(0.0, 50.0) == doctest::Approx(0.0));
  CHECK(damping_gamma(50.0 * std::log(2.0), 50.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(damping_gamma(1e9, 50.0) == doctest::Approx(1.0));
  CHECK(damping_gamma(1.0, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(damping_gamma(-1.0, 50.0), std::invalid_argument);
  CHECK_THROWS_AS(damping_gamma(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("amplitude damping channel construction") {
  for (double t : {0.0, 3.0, 40.0}) {
    const KrausChannel ch = amplitude_damping(t, 61.0);
    Matrix sum = Matrix::Zero(2, 2);
    for (const Matrix& a : ch.operators) sum += a.adjoint() * a;
    CHECK(max_abs_diff(sum, Matrix::Identity(2, 2)) < 1e-12);
  }
  QuantumState one = QuantumState::basis_state(1, 1);
  one = apply_channel(one, amplitude_damping(1e7, 61.0));
  CHECK(measure_probabilities(one)[0] == doctest::Approx(1.0));
}

TEST_CASE("assignment error from the device characterization") {
  // D1 column of the readout table.
  CHECK(assignment_error(0.0567, 0.0240) == doctest::Approx(0.04035).epsilon(1e-12));
  const NoiseConfig dev = NoiseConfig::device_defaults();
  CHECK(assignment_error(dev.p0[0], dev.p1[0]) == doctest::Approx(0.0404).epsilon(2e-3));
}

TEST_CASE("readout flips") {
  RngStream rng(5);
  SUBCASE("degenerate probabilities") {
    for (int i = 0; i < 20; ++i) {
      CHECK(readout_flip(1, 0.0, 0.0, rng) == 1);
      CHECK(readout_flip(0, 0.0, 0.0, rng) == 0);
      CHECK(readout_flip(1, 1.0, 0.0, rng) == 0);
    }
  }
  SUBCASE("statistics over one million trials") {
    const double p0 = 0.0567, p1 = 0.0240;
    long flips_1 = 0, flips_0 = 0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
      flips_1 += readout_flip(1, p0, p1, rng) == 0;
      flips_0 += readout_flip(0, p0, p1, rng) == 1;
    }
    const double se0 = std::sqrt(p0 * (1 - p0) / n);
    const double se1 = std::sqrt(p1 * (1 - p1) / n);
    CHECK(std::abs(flips_1 / 1e6 - p0) < 4.0 * se0);
    CHECK(std::abs(flips_0 / 1e6 - p1) < 4.0 * se1);
  }
}

TEST_CASE("exact readout fold") {
  // Single qubit in |0>: reported-1 probability is p1.
  const std::array<double, 1> p0{0.2}, p1{0.05};
  const auto folded = fold_readout({1.0, 0.0}, p0, p1);
  CHECK(folded[0] == doctest::Approx(0.95));
  CHECK(folded[1] == doctest::Approx(0.05));
  // Distribution stays normalized on a random-ish table.
  const auto folded2 = fold_readout({0.3, 0.2, 0.4, 0.1}, std::array<double, 2>{0.1, 0.02},
                                    std::array<double, 2>{0.03, 0.07});
  double sum = 0.0;
  for (double v : folded2) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zz evolution") {
  SUBCASE("zero coupling is the identity") {
    QuantumState s(2);
    s = apply_unitary(s, UnitarySpec(gates::h(), {0}));
    check_states_close(zz_evolution(s, Eigen::MatrixXd::Zero(2, 2), 7.0), s, 1e-12);
  }

  SUBCASE("a 50 kHz pair flips <X1> at t_pi = 10 us") {
    Eigen::MatrixXd zz = Eigen::MatrixXd::Zero(2, 2);
    zz(0, 1) = zz(1, 0) = -50.0;
    QuantumState plus(2);
    for (int q = 0; q < 2; ++q) plus = apply_unitary(plus, UnitarySpec(gates::h(), {q}));
    const Matrix x1 = embed(gates::x(), std::array<int, 1>{0}, 2);
    const QuantumState at_tpi = zz_evolution(plus, zz, 10.0);
    CHECK((x1 * at_tpi.density_matrix()).trace().real() == doctest::Approx(-1.0).epsilon(1e-10));
    const QuantumState at_half = zz_evolution(plus, zz, 5.0);
    CHECK((x1 * at_half.density_matrix()).trace().real() == doctest::Approx(0.0).epsilon(1e-10));
  }

  SUBCASE("evolving forward then with the flipped sign restores the state") {
    Eigen::MatrixXd zz = Eigen::MatrixXd::Zero(3, 3);
    zz(0, 1) = zz(1, 0) = -49.5;
    zz(1, 2) = zz(2, 1) = 13.0;
    QuantumState s(3);
    for (int q = 0; q < 3; ++q) s = apply_unitary(s, UnitarySpec(gates::h(), {q}));
    const QuantumState back = zz_evolution(zz_evolution(s, zz, 3.7), -zz, 3.7);
    check_states_close(back, s, 1e-10);
  }

  SUBCASE("asymmetric matrices are rejected") {
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 1) = 5.0;
    QuantumState s(2);
    CHECK_THROWS_AS(zz_evolution(s, bad, 1.0), std::invalid_argument);
  }
}

TEST_CASE("idle evolution") {
  SUBCASE("zero time is the identity") {
    const QuantumState s = PrepTarget::z(1, 1).ideal_state();
    check_states_close(idle_evolution(s, NoiseConfig::device_defaults(), 0.0), s, 1e-15);
  }

  SUBCASE("equal T1, no ZZ: logical survival matches the closed-form decay") {
    NoiseConfig cfg = NoiseConfig::ideal();
    const double t1 = 76.75;
    cfg.t1_us.fill(t1);
    cfg.zz_khz.setZero();
    const QuantumState init = PrepTarget::z(1, 1).ideal_state();
    for (double t : {5.0, 30.0, 90.0}) {
      const QuantumState evolved = idle_evolution(init, cfg, t);
      // Parity post-processing on the exact outcome distribution.
      const auto probs = measure_probabilities(evolved);
      double accept = 0.0, p1_prot = 0.0;
      for (int c = 0; c < 16; ++c) {
        const int c1 = c & 1, c2 = (c >> 1) & 1, c3 = (c >> 2) & 1, c4 = (c >> 3) & 1;
        if ((c1 ^ c2 ^ c3 ^ c4) != 0) continue;
        accept += probs[static_cast<std::size_t>(c)];
        if ((c1 ^ c2) == 1) p1_prot += probs[static_cast<std::size_t>(c)];
      }
      CHECK(p1_prot / accept == doctest::Approx(analytic::ideal_decay(t, t1)).epsilon(1e-6));
    }
  }

  SUBCASE("doubling the slice count moves the state by less than 1e-6") {
    const NoiseConfig dev = NoiseConfig::device_defaults();
    QuantumState reg(5);
    for (int q = 0; q < 4; ++q) reg = apply_unitary(reg, UnitarySpec(gates::h(), {q}));
    reg = apply_unitary(reg, UnitarySpec(gates::x(), {kS1}));
    const IdleOptions coarse;  // default slice count
    IdleOptions fine;
    fine.trotter_slices = 2 * coarse.trotter_slices;
    const QuantumState a = idle_evolution(reg, dev, 10.0, coarse);
    const QuantumState b = idle_evolution(reg, dev, 10.0, fine);
    CHECK(trace_distance(a.density_matrix(), b.density_matrix()) < 1e-6);
  }

  SUBCASE("midpoint-X echo revives the protected X observable") {
    const NoiseConfig dev = NoiseConfig::device_defaults();
    for (double t : {2.0, 4.0}) {
      const auto plain = pipelines::run_decay_point(pipelines::DecayState::pp, t, dev,
                                                    EchoSequence::none, 1, 1, 100, true);
      const auto echoed = pipelines::run_decay_point(pipelines::DecayState::pp, t, dev,
                                                     EchoSequence::midpoint_x, 1, 1, 100, true);
      auto x_protected = [](const PostSelSummary& s) {
        return 1.0 - 2.0 * (s.errors->p_err_protected + s.errors->p_err_joint);
      };
      CHECK(x_protected(echoed.exact) > x_protected(plain.exact) + 0.1);
    }
  }
}

TEST_CASE("device defaults are valid and symmetric") {
  const NoiseConfig dev = NoiseConfig::device_defaults();
  CHECK_NOTHROW(dev.validate());
  CHECK(dev.zz_khz(kD1, kS1) == doctest::Approx(-94.5));
  CHECK(dev.zz_khz(kS1, kD1) == doctest::Approx(-94.5));
  CHECK(dev.zz_khz(kD1, kD3) == 0.0);  // below measurement resolution
  NoiseConfig bad = dev;
  bad.t1_us[2] = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = dev;
  bad.zz_khz(0, 1) = 3.0;  // symmetry broken
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

}  // TEST_SUITE
