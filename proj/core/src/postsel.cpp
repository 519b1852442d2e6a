// SPDX-License-Identifier: Apache-2.0
#include "ft422/postsel.hpp"

#include <cmath>
#include <stdexcept>

namespace ft422 {

namespace {

double binomial_se(double p, double n) {
  if (n <= 0.0) return 0.0;
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / n);
}

}  // namespace

ShotRecord ShotRecord::from_outcome(std::uint32_t outcome, PrepTarget::Basis basis) {
  ShotRecord r;
  r.basis = basis;
  for (int i = 0; i < 4; ++i) r.c[static_cast<std::size_t>(i)] = (outcome >> i) & 1;
  r.c_s = (outcome >> kS1) & 1;
  return r;
}

std::uint32_t ShotRecord::outcome() const {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(c[static_cast<std::size_t>(i)] & 1) << i;
  v |= static_cast<std::uint32_t>(c_s & 1) << kS1;
  return v;
}

PostSelSummary postprocess(const std::vector<ShotRecord>& shots, const PrepTarget& target) {
  if (shots.empty()) throw std::invalid_argument("postprocess: no shots");
  const PrepTarget::Basis basis = shots.front().basis;
  for (const ShotRecord& s : shots)
    if (s.basis != basis) throw std::invalid_argument("postprocess: mixed measurement frames");
  const auto expected_basis =
      target.basis == PrepTarget::Basis::z ? PrepTarget::Basis::z : PrepTarget::Basis::x;
  if (basis != expected_basis)
    throw std::invalid_argument("postprocess: shot frame does not match target basis");

  const int exp_p = target.expected_protected_parity();
  const int exp_g = target.expected_gauge_parity();

  std::int64_t syndrome_ok = 0;
  std::int64_t accepted = 0;
  std::int64_t n_p = 0, n_g = 0, n_j = 0;
  for (const ShotRecord& s : shots) {
    if (s.c_s != 1) continue;
    ++syndrome_ok;
    const int parity = s.c[0] ^ s.c[1] ^ s.c[2] ^ s.c[3];
    if (parity != 0) continue;
    ++accepted;
    const bool p_err = (s.c[0] ^ s.c[1]) != exp_p;
    const bool g_err = (s.c[0] ^ s.c[2]) != exp_g;
    if (p_err && g_err)
      ++n_j;
    else if (p_err)
      ++n_p;
    else if (g_err)
      ++n_g;
  }

  PostSelSummary out;
  out.total_shots = static_cast<std::int64_t>(shots.size());
  out.total_syndrome_ok = syndrome_ok;
  out.accepted = accepted;
  if (syndrome_ok > 0) {
    out.acceptance = static_cast<double>(accepted) / static_cast<double>(syndrome_ok);
    out.se_acceptance = binomial_se(out.acceptance, static_cast<double>(syndrome_ok));
  }
  if (accepted > 0) {
    ConditionalErrors e;
    const double n = static_cast<double>(accepted);
    e.p_err_protected = static_cast<double>(n_p) / n;
    e.p_err_gauge = static_cast<double>(n_g) / n;
    e.p_err_joint = static_cast<double>(n_j) / n;
    e.se_protected = binomial_se(e.p_err_protected, n);
    e.se_gauge = binomial_se(e.p_err_gauge, n);
    e.se_joint = binomial_se(e.p_err_joint, n);
    out.errors = e;
  }
  return out;
}

PostSelSummary exact_statistics(const std::vector<double>& outcome_probs, const PrepTarget& target) {
  if (outcome_probs.size() != 32)
    throw std::invalid_argument("exact_statistics: expected a 32-entry outcome table");
  const int exp_p = target.expected_protected_parity();
  const int exp_g = target.expected_gauge_parity();

  double p_syndrome = 0.0, p_accept = 0.0, p_p = 0.0, p_g = 0.0, p_j = 0.0;
  for (std::uint32_t outcome = 0; outcome < 32; ++outcome) {
    const double w = outcome_probs[outcome];
    if (((outcome >> kS1) & 1) != 1) continue;
    p_syndrome += w;
    const int c1 = outcome & 1, c2 = (outcome >> 1) & 1, c3 = (outcome >> 2) & 1,
              c4 = (outcome >> 3) & 1;
    if ((c1 ^ c2 ^ c3 ^ c4) != 0) continue;
    p_accept += w;
    const bool p_err = (c1 ^ c2) != exp_p;
    const bool g_err = (c1 ^ c3) != exp_g;
    if (p_err && g_err)
      p_j += w;
    else if (p_err)
      p_p += w;
    else if (g_err)
      p_g += w;
  }

  PostSelSummary out;
  if (p_syndrome > 0.0) out.acceptance = p_accept / p_syndrome;
  if (p_accept > 1e-15) {
    ConditionalErrors e;
    e.p_err_protected = p_p / p_accept;
    e.p_err_gauge = p_g / p_accept;
    e.p_err_joint = p_j / p_accept;
    out.errors = e;
  }
  return out;
}

std::vector<ShotRecord> apply_readout_noise(const std::vector<std::uint32_t>& outcomes,
                                            PrepTarget::Basis basis, const NoiseConfig& noise,
                                            std::uint64_t seed) {
  // Stream 1 is reserved for readout so the same seed can drive the shot
  // sampler on stream 0 without correlation.
  RngStream rng = RngStream(seed).substream(1);
  std::vector<ShotRecord> out;
  out.reserve(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ShotRecord r = ShotRecord::from_outcome(outcomes[i], basis);
    RngStream shot_rng = rng.substream(i);
    for (int q = 0; q < 4; ++q)
      r.c[static_cast<std::size_t>(q)] = readout_flip(
          r.c[static_cast<std::size_t>(q)], noise.p0[static_cast<std::size_t>(q)],
          noise.p1[static_cast<std::size_t>(q)], shot_rng);
    r.c_s = readout_flip(r.c_s, noise.p0[kS1], noise.p1[kS1], shot_rng);
    out.push_back(r);
  }
  return out;
}

}  // namespace ft422
