// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ft422/analytic.hpp"

namespace ft422::fit {

struct CurveData {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> sigma;  // per-point standard errors, > 0

  void validate() const;
  static CurveData unweighted(std::vector<double> x, std::vector<double> y);
};

struct FitResult {
  std::vector<std::string> names;
  std::vector<double> values;
  std::vector<double> stderrs;  // from (J^T W J)^-1; huge when unidentifiable
  double rss = 0.0;             // weighted residual sum of squares
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool identifiable = true;

  double value(const std::string& name) const;
  double stderr_of(const std::string& name) const;
};

struct FitOptions {
  int max_iterations = 400;
  // converged requires the final max |J^T r| to fall below this; the default
  // leaves headroom for finite-difference Jacobian noise.
  double gradient_tol = 1e-7;
  double step_tol = 1e-14;
};

using ModelFn = std::function<double(double, std::span<const double>)>;
using ResidualFn = std::function<void(std::span<const double>, std::span<double>)>;

// Damped Gauss-Newton (Levenberg-Marquardt) minimizer of |r(p)|^2 with
// finite-difference Jacobians; deterministic given the initial point.
FitResult least_squares_residuals(const ResidualFn& residuals, int num_residuals,
                                  std::vector<double> init, std::vector<std::string> names,
                                  const FitOptions& options = {});

// Weighted curve fit: minimizes sum ((y_i - f(x_i; p)) / sigma_i)^2.
FitResult least_squares(const ModelFn& model, const CurveData& data, std::vector<double> init,
                        std::vector<std::string> names = {}, const FitOptions& options = {});

// --- insertion-curve fitting -----------------------------------------------

struct InsertionCurves {
  std::vector<double> theta;
  std::vector<double> accept;
  std::vector<double> err_protected;
  std::vector<double> err_gauge;
};

enum class CurveKind { acceptance, err_protected, err_gauge };

struct InsertionLocationFit {
  double delta = 0.0;
  double a = 0.0, b = 0.0;
  double c_protected = 0.0, d_protected = 0.0;
  double c_gauge = 0.0, d_gauge = 0.0;
  CurveKind delta_source = CurveKind::acceptance;
  double rss = 0.0;
};

struct InsertionFit {
  std::array<InsertionLocationFit, 3> locations;  // indexed by Location enum
};

// Staged per-location fit: the offset delta comes first from the curve with
// the greatest curvature (largest summed |second difference|; this selects
// the acceptance at A and C and the gauge error at B), using the exact model
// class of that curve. With delta frozen, the acceptance then fixes (a, b)
// and each error curve fixes its (c, d) against the fitted acceptance.
// Offsets are reported in (-pi/2, pi/2]; cosine amplitudes carry the sign.
InsertionFit fit_insertion(const std::array<InsertionCurves, 3>& curves_by_location);

// Synthetic curves generated from fitted-parameter values (noiseless).
std::array<InsertionCurves, 3> insertion_curves_from_values(
    const struct InsertionValueSet& values, const std::vector<double>& theta_grid);

struct InsertionValueSet {
  std::array<double, 3> delta{};
  std::array<double, 3> a{}, b{};
  std::array<double, 3> c_protected{}, d_protected{};
  std::array<double, 3> c_gauge{}, d_gauge{};
};

InsertionValueSet to_value_set(const InsertionFit& fit);

// --- decay fitting ----------------------------------------------------------

struct DecayCurves {
  std::vector<double> t_us;
  std::vector<double> p1_protected;
  std::vector<double> p1_gauge;
  std::vector<double> sigma_protected;  // optional; empty = unweighted
  std::vector<double> sigma_gauge;
};

struct DecayFit {
  std::array<double, 4> t1_us{};
  double p0 = 0.0;
  double p1 = 0.0;
  FitResult details;
};

// Joint 6-parameter fit of the two conditional survival series with the
// classical decay model as forward model; the initial mixture is fixed.
DecayFit fit_decay(const DecayCurves& data, const std::array<double, 16>& init_mixture);

// Single-T1 fit of the equal-damping survival curve.
FitResult fit_single_t1(const CurveData& data, double init_t1_us = 50.0);

// --- model-parameter matching ------------------------------------------------

struct MatchResult {
  double p0 = 0.0;
  double p1 = 0.0;
  double objective = 0.0;
  bool on_boundary = false;  // minimizer pinned to an edge of [0, 0.5]^2
};

// Grid-plus-refine search over (p0, p1) in [0, 0.5]^2 minimizing the summed
// absolute difference between the closed-form insertion coefficients and the
// fitted values (A-expressions reused for C; gauge-at-A equals protected).
// The coefficient family is exactly symmetric under p0 <-> p1, so the
// minimizer is reported with p0 >= p1.
MatchResult match_model_params(const InsertionValueSet& fitted);

}  // namespace ft422::fit
