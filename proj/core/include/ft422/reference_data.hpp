// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

namespace ft422::reference {

// Reported characterization of the reference five-transmon device and of its
// state-preparation experiments. Device-level defaults (T1, readout
// crossovers, static ZZ) live in NoiseConfig::device_defaults(); the values
// here anchor fit-recovery tests and plausibility checks.

// Fitted parameters of the phase-error insertion experiment, per location
// A, B, C: offset delta added to theta, acceptance a + b cos(theta + delta),
// and conditional-error numerators c + d cos(theta + delta) for the protected
// and gauge qubits.
struct InsertionFitValues {
  std::array<double, 3> delta;
  std::array<double, 3> a;
  std::array<double, 3> b;
  std::array<double, 3> c_protected;
  std::array<double, 3> d_protected;
  std::array<double, 3> c_gauge;
  std::array<double, 3> d_gauge;
};

inline constexpr InsertionFitValues kInsertionFit{
    {-0.1369, -0.2291, 0.0278},
    {0.5044, 0.7614, 0.4983},
    {0.2632, 0.0059, 0.2708},
    {0.0626, 0.0189, 0.0646},
    {-0.0444, -0.0006, -0.0466},
    {0.0697, 0.3847, 0.0795},
    {-0.0279, -0.3573, -0.0395},
};

// Uniform readout crossovers that best match the insertion-model coefficients
// to the fitted values above.
inline constexpr double kMatchedP0 = 0.108;
inline constexpr double kMatchedP1 = 0.043;

// Joint decay-model fit for the |1 1> codeword lifetime.
inline constexpr std::array<double, 4> kDecayFitT1Us{57.0, 84.0, 85.0, 81.0};
inline constexpr double kDecayFitP0 = 0.05;
inline constexpr double kDecayFitP1 = 0.015;
// Equal-T1 reference curve plotted alongside the data.
inline constexpr double kDecayIdealT1Us = 76.75;

// Measured acceptance and codespace populations of the eight prepared logical
// states (rows ordered 00, 01, 10, 11 then ++, +-, -+, --; population columns
// in the same basis ordering). Used as a format fixture, not a simulation
// target.
struct StatePrepRow {
  double acceptance;
  std::array<double, 4> populations;
};

inline constexpr std::array<StatePrepRow, 4> kStatePrepZ{{
    {0.7566, {0.9726, 0.0216, 0.0040, 0.0019}},
    {0.7773, {0.0245, 0.9678, 0.0037, 0.0041}},
    {0.7702, {0.0028, 0.0042, 0.9673, 0.0258}},
    {0.7853, {0.0033, 0.0034, 0.0224, 0.9709}},
}};

inline constexpr std::array<StatePrepRow, 4> kStatePrepX{{
    {0.7897, {0.9667, 0.0065, 0.0199, 0.0069}},
    {0.7707, {0.0057, 0.9632, 0.0064, 0.0247}},
    {0.7799, {0.0247, 0.0069, 0.9626, 0.0058}},
    {0.7731, {0.0065, 0.0253, 0.0063, 0.9619}},
}};

// Protected / gauge preparation errors of the |1 1> codeword (echoed
// four-pulse CNOT sequence); the protected error is the smaller by design.
inline constexpr double kPrep11Acceptance = 0.7853;
inline constexpr double kPrep11ErrProtected = 0.0067;
inline constexpr double kPrep11ErrGauge = 0.0257;

}  // namespace ft422::reference
