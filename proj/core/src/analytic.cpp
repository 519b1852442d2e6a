// SPDX-License-Identifier: Apache-2.0
#include "ft422/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "ft422/noise.hpp"

namespace ft422::analytic {

Location location_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Location::a;
    case 'B': case 'b': return Location::b;
    case 'C': case 'c': return Location::c;
    default: throw std::invalid_argument("location_from_char: expected A, B or C");
  }
}

InsertionCoefficients insertion_coefficients(Location loc, double p0, double p1) {
  if (p0 < 0.0 || p0 > 1.0 || p1 < 0.0 || p1 > 1.0)
    throw std::invalid_argument("insertion_coefficients: probabilities must lie in [0, 1]");
  const double al = 1.0 - 2.0 * p0;   // E[(-1)^flip] for a true-1 bit
  const double be = 1.0 - 2.0 * p1;   // for a true-0 bit
  const double ab = al * be;
  const double a2 = al * al, b2 = be * be;
  const double sum2 = a2 + b2;
  const double diff = al - be;

  // Joint probabilities of (total parity even, protected parity, gauge
  // parity) for the ideal outcome strings and for each error branch; the
  // inserted Z(theta) weights the branches (1 +- cos theta)/2.
  const double p_ideal_single = (1.0 - a2) * (1.0 - b2) / 8.0;  // one parity flipped
  const double p_ideal_joint = ((1.0 - ab) * (1.0 - ab) + diff * diff) / 8.0;

  InsertionCoefficients k;
  if (loc == Location::b) {
    // Error branch flips D3, D4: two-one strings, gauge parity inverted.
    k.a = 0.5 * (1.0 + a2 * b2);
    k.b = 0.0;
    const double pe_single = (1.0 - a2) * (1.0 - b2) / 8.0;  // branch-correct & protected-flip
    const double pe_gauge = ((1.0 + ab) * (1.0 + ab) + (al + be) * (al + be)) / 8.0;
    const double pe_joint = ((1.0 - ab) * (1.0 - ab) + diff * diff) / 8.0;
    k.c_protected = 0.25 * (2.0 * p_ideal_single + 2.0 * pe_single);
    k.d_protected = 0.25 * (2.0 * p_ideal_single - 2.0 * pe_single);  // = 0
    k.c_gauge = 0.25 * (2.0 * p_ideal_single + 2.0 * pe_gauge);
    k.d_gauge = 0.25 * (2.0 * p_ideal_single - 2.0 * pe_gauge);
    k.c_joint = 0.25 * (2.0 * p_ideal_joint + 2.0 * pe_joint);
    k.d_joint = 0.25 * (2.0 * p_ideal_joint - 2.0 * pe_joint);  // = 0
    return k;
  }

  // Locations A and C: error branches are one weight-3 and one weight-1
  // string whose statistics are symmetric under A <-> C, so the expressions
  // coincide; both measured parities flip, so single-parity errors enter
  // through readout only and gauge equals protected.
  k.a = 0.5 + 0.25 * a2 * b2 - 0.125 * ab * sum2;
  k.b = 0.25 * a2 * b2 + 0.125 * ab * sum2;
  const double pe_sum_single = (2.0 - ab * sum2 - diff * diff) / 8.0;   // S = -1 sector
  const double pe_sum_joint = (2.0 - ab * sum2 + 3.0 * diff * diff) / 8.0;  // S = +3 sector
  k.c_protected = 0.25 * (2.0 * p_ideal_single + pe_sum_single);
  k.d_protected = 0.25 * (2.0 * p_ideal_single - pe_sum_single);
  k.c_gauge = k.c_protected;
  k.d_gauge = k.d_protected;
  k.c_joint = 0.25 * (2.0 * p_ideal_joint + pe_sum_joint);
  k.d_joint = 0.25 * (2.0 * p_ideal_joint - pe_sum_joint);
  return k;
}

InsertionCoefficients reported_insertion_coefficients(Location loc, double p0, double p1) {
  if (p0 < 0.0 || p0 > 1.0 || p1 < 0.0 || p1 > 1.0)
    throw std::invalid_argument("reported_insertion_coefficients: probabilities must lie in [0, 1]");
  InsertionCoefficients k;
  if (loc == Location::b) {
    const double q = p0 * (p0 - 1.0) + p1 * (p1 - 1.0);
    k.a = 1.0 + 2.0 * q * (1.0 + q);
    k.b = std::pow(p0 - p1, 2) * std::pow(p0 + p1 - 1.0, 2);
    k.c_protected = 0.5 * q * q;
    k.d_protected = 0.5 * std::pow(p0 - p1, 2) * std::pow(p0 + p1 - 1.0, 2);
    k.c_gauge = 0.5 * (p0 * p0 + std::pow(p1 - 1.0, 2)) * (std::pow(p0 - 1.0, 2) + p1 * p1);
    k.d_gauge = 0.5 * (std::pow(p0 - p1, 2) - 1.0) * std::pow(p0 + p1 - 1.0, 2);
    return k;
  }
  k.a = 0.5 * (1.0 + std::pow(p0 - p1, 2) *
                         (3.0 + 4.0 * p0 * p0 - 6.0 * p1 + 4.0 * p1 * p1 + p0 * (4.0 * p1 - 6.0)));
  k.b = 0.5 * std::pow(p0 + p1 - 1.0, 2) *
        (1.0 + 4.0 * p0 * p0 - 2.0 * p1 + 4.0 * p1 * p1 - 2.0 * p0 * (2.0 * p1 + 1.0));
  k.c_protected =
      0.25 * (2.0 * std::pow(p0, 4) + p1 + 3.0 * p0 * p0 * p1 + std::pow(p1, 3) * (2.0 * p1 - 3.0) -
              std::pow(p0, 3) * (2.0 * p1 + 3.0) +
              p0 * (1.0 + p1 * (-2.0 + (3.0 - 2.0 * p1) * p1)));
  k.d_protected = 0.25 * std::pow(p0 + p1 - 1.0, 2) *
                  (2.0 * p0 * p0 + p1 * (2.0 * p1 - 1.0) - p0 * (2.0 * p1 + 1.0));
  k.c_gauge = k.c_protected;
  k.d_gauge = k.d_protected;
  return k;
}

double acceptance_model(Location loc, double theta, double p0, double p1) {
  const InsertionCoefficients k = insertion_coefficients(loc, p0, p1);
  return k.a + k.b * std::cos(theta);
}

std::optional<double> logical_error_model(Location loc, LogicalQubit r, double theta, double p0,
                                          double p1) {
  const InsertionCoefficients k = insertion_coefficients(loc, p0, p1);
  const double accept = k.a + k.b * std::cos(theta);
  if (accept < 1e-12) return std::nullopt;
  double c = k.c_protected, d = k.d_protected;
  if (r == LogicalQubit::gauge_q) {
    c = k.c_gauge;
    d = k.d_gauge;
  } else if (r == LogicalQubit::joint) {
    c = k.c_joint;
    d = k.d_joint;
  }
  return (c + d * std::cos(theta)) / accept;
}

double ideal_decay(double t_us, double t1_us) {
  if (!(t1_us > 0.0)) throw std::invalid_argument("ideal_decay: T1 must be positive");
  const double e = std::exp(t_us / t1_us);
  return 1.0 / (2.0 - 2.0 * e + e * e);
}

DecayModelParams DecayModelParams::ideal_codeword(const code422::LogicalLabel& label,
                                                  std::array<double, 4> t1_us, double p0,
                                                  double p1) {
  DecayModelParams p;
  p.init_mixture[static_cast<std::size_t>(label.index())] = 1.0;
  p.t1_us = t1_us;
  p.p0 = p0;
  p.p1 = p1;
  return p;
}

void DecayModelParams::validate() const {
  double sum = 0.0;
  for (double w : init_mixture) {
    if (w < -1e-12) throw std::invalid_argument("DecayModelParams: negative mixture weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("DecayModelParams: mixture weights must sum to 1");
  for (double t1 : t1_us)
    if (!(t1 > 0.0)) throw std::invalid_argument("DecayModelParams: T1 must be positive");
  if (p0 < 0.0 || p0 > 1.0 || p1 < 0.0 || p1 > 1.0)
    throw std::invalid_argument("DecayModelParams: readout probabilities must lie in [0, 1]");
}

DecayPoint decay_model(double t_us, const DecayModelParams& params) {
  params.validate();
  if (t_us < 0.0) throw std::invalid_argument("decay_model: negative time");

  std::array<double, 4> survive{};
  for (int q = 0; q < 4; ++q)
    survive[static_cast<std::size_t>(q)] =
        1.0 - damping_gamma(t_us, params.t1_us[static_cast<std::size_t>(q)]);

  // Exact distribution over true 4-bit outcomes.
  std::vector<double> probs(16, 0.0);
  for (int idx = 0; idx < 16; ++idx) {
    const double weight = params.init_mixture[static_cast<std::size_t>(idx)];
    if (weight == 0.0) continue;
    const auto [s0, s1] = code422::label_bitstrings(code422::LogicalLabel::from_index(idx));
    for (int source : {s0, s1}) {
      for (int result = 0; result < 16; ++result) {
        if ((result & ~source) != 0) continue;  // bits cannot be excited by decay
        double p = 0.5 * weight;
        for (int q = 0; q < 4; ++q) {
          if (!((source >> q) & 1)) continue;
          p *= ((result >> q) & 1) ? survive[static_cast<std::size_t>(q)]
                                   : 1.0 - survive[static_cast<std::size_t>(q)];
        }
        probs[static_cast<std::size_t>(result)] += p;
      }
    }
  }

  const std::array<double, 4> p0s{params.p0, params.p0, params.p0, params.p0};
  const std::array<double, 4> p1s{params.p1, params.p1, params.p1, params.p1};
  probs = fold_readout(probs, p0s, p1s);

  DecayPoint out;
  double p_prot = 0.0, p_gauge = 0.0;
  for (int c = 0; c < 16; ++c) {
    const int c1 = c & 1, c2 = (c >> 1) & 1, c3 = (c >> 2) & 1, c4 = (c >> 3) & 1;
    if ((c1 ^ c2 ^ c3 ^ c4) != 0) continue;
    const double w = probs[static_cast<std::size_t>(c)];
    out.acceptance += w;
    if ((c1 ^ c2) == 1) p_prot += w;
    if ((c1 ^ c3) == 1) p_gauge += w;
  }
  if (out.acceptance > 0.0) {
    out.p1_protected = p_prot / out.acceptance;
    out.p1_gauge = p_gauge / out.acceptance;
  }
  return out;
}

}  // namespace ft422::analytic
