// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ft422/pipelines.hpp"
#include "ft422/postsel.hpp"
#include "helpers.hpp"

using namespace ft422;
using namespace ft422::testing;

namespace {

ShotRecord make_shot(int cs, int c1, int c2, int c3, int c4,
                     PrepTarget::Basis basis = PrepTarget::Basis::z) {
  ShotRecord r;
  r.c_s = cs;
  r.c = {c1, c2, c3, c4};
  r.basis = basis;
  return r;
}

}  // namespace

TEST_SUITE("postsel") {

TEST_CASE("shot record outcome round trip") {
  const ShotRecord r = make_shot(1, 0, 1, 1, 0);
  CHECK(r.outcome() == 0b10110u);
  const ShotRecord back = ShotRecord::from_outcome(r.outcome(), PrepTarget::Basis::z);
  CHECK(back.c_s == 1);
  CHECK(back.c == std::array<int, 4>{0, 1, 1, 0});
}

TEST_CASE("ideal shots give unit acceptance and zero errors") {
  const PrepTarget target = PrepTarget::z(1, 1);
  std::vector<ShotRecord> shots;
  for (int i = 0; i < 50; ++i) {
    shots.push_back(make_shot(1, 0, 1, 1, 0));
    shots.push_back(make_shot(1, 1, 0, 0, 1));
    shots.push_back(make_shot(0, 0, 1, 1, 0));  // rejected by the syndrome
  }
  const PostSelSummary s = postprocess(shots, target);
  CHECK(s.total_shots == 150);
  CHECK(s.total_syndrome_ok == 100);
  CHECK(s.accepted == 100);
  CHECK(s.acceptance == doctest::Approx(1.0));
  REQUIRE(s.errors.has_value());
  CHECK(s.errors->p_err_protected == 0.0);
  CHECK(s.errors->p_err_gauge == 0.0);
  CHECK(s.errors->p_err_joint == 0.0);
}

TEST_CASE("error classification against |11>") {
  const PrepTarget target = PrepTarget::z(1, 1);

  SUBCASE("(0,0,1,1) is an accepted exclusive protected error") {
    const PostSelSummary s = postprocess({make_shot(1, 0, 0, 1, 1)}, target);
    REQUIRE(s.errors.has_value());
    CHECK(s.errors->p_err_protected == doctest::Approx(1.0));
    CHECK(s.errors->p_err_gauge == doctest::Approx(0.0));
    CHECK(s.errors->p_err_joint == doctest::Approx(0.0));
  }

  SUBCASE("(0,1,0,1) is an accepted exclusive gauge error") {
    // c1^c2 = 1 (correct), c1^c3 = 0 (wrong).
    const PostSelSummary s = postprocess({make_shot(1, 0, 1, 0, 1)}, target);
    REQUIRE(s.errors.has_value());
    CHECK(s.errors->p_err_gauge == doctest::Approx(1.0));
    CHECK(s.errors->p_err_protected == doctest::Approx(0.0));
  }

  SUBCASE("(0,0,0,0) is an accepted joint error") {
    const PostSelSummary s = postprocess({make_shot(1, 0, 0, 0, 0)}, target);
    REQUIRE(s.errors.has_value());
    CHECK(s.errors->p_err_joint == doctest::Approx(1.0));
    CHECK(s.errors->p_err_protected == doctest::Approx(0.0));
    CHECK(s.errors->p_err_gauge == doctest::Approx(0.0));
  }

  SUBCASE("odd-parity shots are rejected regardless of target") {
    const PostSelSummary s = postprocess({make_shot(1, 0, 1, 1, 1)}, target);
    CHECK(s.accepted == 0);
    CHECK_FALSE(s.errors.has_value());
  }
}

TEST_CASE("single data-bit flips always reject an accepted ideal shot") {
  for (const int base : {0b0110, 0b1001}) {
    for (int bit = 0; bit < 4; ++bit) {
      const int flipped = base ^ (1 << bit);
      const ShotRecord r =
          ShotRecord::from_outcome(static_cast<std::uint32_t>(flipped) | (1u << kS1),
                                   PrepTarget::Basis::z);
      const PostSelSummary s = postprocess({r}, PrepTarget::z(1, 1));
      CHECK(s.accepted == 0);
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(postprocess({}, PrepTarget::z(0, 0)), std::invalid_argument);
  std::vector<ShotRecord> mixed{make_shot(1, 0, 0, 0, 0, PrepTarget::Basis::z),
                                make_shot(1, 0, 0, 0, 0, PrepTarget::Basis::x)};
  CHECK_THROWS_AS(postprocess(mixed, PrepTarget::z(0, 0)), std::invalid_argument);
  // Frame must match the target basis.
  CHECK_THROWS_AS(postprocess({make_shot(1, 0, 0, 0, 0, PrepTarget::Basis::x)},
                              PrepTarget::z(0, 0)),
                  std::invalid_argument);
  // All shots rejected: acceptance defined (0), errors flagged absent.
  const PostSelSummary s = postprocess({make_shot(1, 1, 0, 0, 0)}, PrepTarget::z(0, 0));
  CHECK(s.acceptance == 0.0);
  CHECK_FALSE(s.errors.has_value());
}

TEST_CASE("exact statistics against a first-principles flip enumeration") {
  // Ideal |11> circuit + uniform readout: enumerate the 2^4 data flip
  // patterns over the two ideal strings directly.
  const double p0 = 0.07, p1 = 0.02;
  const PrepTarget target = PrepTarget::z(1, 1);
  NoiseConfig noise = NoiseConfig::ideal();
  noise.set_uniform_readout(p0, p1);
  const Circuit circuit = build_prep_circuit(target);
  const PostSelSummary got =
      exact_statistics(pipelines::exact_outcome_distribution(circuit, noise), target);

  double accept = 0.0, prot = 0.0, gauge = 0.0, joint = 0.0;
  for (const int truth : {0b0110, 0b1001}) {
    for (int reported = 0; reported < 16; ++reported) {
      double w = 0.5;
      for (int bit = 0; bit < 4; ++bit) {
        const bool was = (truth >> bit) & 1;
        const bool now = (reported >> bit) & 1;
        w *= was ? (now ? 1.0 - p0 : p0) : (now ? p1 : 1.0 - p1);
      }
      const int c1 = reported & 1, c2 = (reported >> 1) & 1, c3 = (reported >> 2) & 1,
                c4 = (reported >> 3) & 1;
      if ((c1 ^ c2 ^ c3 ^ c4) != 0) continue;
      accept += w;
      const bool p_err = (c1 ^ c2) != 1;
      const bool g_err = (c1 ^ c3) != 1;
      if (p_err && g_err)
        joint += w;
      else if (p_err)
        prot += w;
      else if (g_err)
        gauge += w;
    }
  }
  CHECK(got.acceptance == doctest::Approx(accept).epsilon(1e-12));
  REQUIRE(got.errors.has_value());
  CHECK(got.errors->p_err_protected == doctest::Approx(prot / accept).epsilon(1e-12));
  CHECK(got.errors->p_err_gauge == doctest::Approx(gauge / accept).epsilon(1e-12));
  CHECK(got.errors->p_err_joint == doctest::Approx(joint / accept).epsilon(1e-12));
}

TEST_CASE("ideal |00> preparation has exactly zero conditional errors") {
  const PrepTarget target = PrepTarget::z(0, 0);
  const PostSelSummary s = exact_statistics(
      pipelines::exact_outcome_distribution(build_prep_circuit(target), NoiseConfig::ideal()),
      target);
  CHECK(s.acceptance == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(s.errors.has_value());
  CHECK(s.errors->p_err_protected == 0.0);
  CHECK(s.errors->p_err_gauge == 0.0);
  CHECK(s.errors->p_err_joint == 0.0);
}

TEST_CASE("sampled statistics converge to the exact path") {
  NoiseConfig noise = NoiseConfig::device_defaults();
  noise.damping_during_prep = true;
  const PrepTarget target = PrepTarget::z(1, 1);
  const auto point = pipelines::run_sweep_point(target, pipelines::SweepSite::a, 0.8, noise,
                                                1000000, 321, false);
  CHECK(std::abs(point.sampled.acceptance - point.exact.acceptance) <
        4.0 * point.sampled.se_acceptance);
  REQUIRE(point.sampled.errors.has_value());
  REQUIRE(point.exact.errors.has_value());
  CHECK(std::abs(point.sampled.errors->p_err_gauge - point.exact.errors->p_err_gauge) <
        4.0 * std::max(point.sampled.errors->se_gauge, 1e-9));
}

}  // TEST_SUITE
