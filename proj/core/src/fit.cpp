// SPDX-License-Identifier: Apache-2.0
#include "ft422/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ft422::fit {

namespace {

constexpr double kHugeStderr = 1e15;

Eigen::VectorXd eval_residuals(const ResidualFn& fn, std::span<const double> p, int m) {
  Eigen::VectorXd r(m);
  std::vector<double> buf(r.size());
  std::span<double> out(buf);
  fn(p, out);
  for (int i = 0; i < m; ++i) r(i) = buf[static_cast<std::size_t>(i)];
  return r;
}

Eigen::MatrixXd fd_jacobian(const ResidualFn& fn, const std::vector<double>& p, int m) {
  const int n = static_cast<int>(p.size());
  Eigen::MatrixXd jac(m, n);
  std::vector<double> work = p;
  for (int j = 0; j < n; ++j) {
    const double h = 1e-6 * std::max(std::abs(p[static_cast<std::size_t>(j)]), 1e-3);
    work[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] + h;
    const Eigen::VectorXd rp = eval_residuals(fn, work, m);
    work[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] - h;
    const Eigen::VectorXd rm = eval_residuals(fn, work, m);
    work[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)];
    jac.col(j) = (rp - rm) / (2.0 * h);
  }
  return jac;
}

}  // namespace

void CurveData::validate() const {
  if (x.size() != y.size() || x.size() != sigma.size())
    throw std::invalid_argument("CurveData: x, y, sigma must have equal lengths");
  if (x.empty()) throw std::invalid_argument("CurveData: empty data");
  for (double s : sigma)
    if (!(s > 0.0)) throw std::invalid_argument("CurveData: sigma must be positive");
}

CurveData CurveData::unweighted(std::vector<double> x, std::vector<double> y) {
  CurveData d;
  d.sigma.assign(x.size(), 1.0);
  d.x = std::move(x);
  d.y = std::move(y);
  d.validate();
  return d;
}

double FitResult::value(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  throw std::invalid_argument("FitResult: no parameter named " + name);
}

double FitResult::stderr_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return stderrs[i];
  throw std::invalid_argument("FitResult: no parameter named " + name);
}

FitResult least_squares_residuals(const ResidualFn& residuals, int num_residuals,
                                  std::vector<double> init, std::vector<std::string> names,
                                  const FitOptions& options) {
  const int n = static_cast<int>(init.size());
  if (n == 0) throw std::invalid_argument("least_squares: no parameters");
  if (num_residuals < n) throw std::invalid_argument("least_squares: underdetermined problem");
  for (double v : init)
    if (!std::isfinite(v)) throw std::invalid_argument("least_squares: non-finite initial point");
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));

  std::vector<double> p = std::move(init);
  Eigen::VectorXd r = eval_residuals(residuals, p, num_residuals);
  double rss = r.squaredNorm();
  double lambda = 1e-3;

  FitResult result;
  result.names = std::move(names);

  // The search keeps pushing until the iterates are stationary under a tight
  // internal threshold; the looser user-facing gradient_tol only grades the
  // final point.
  const double stationary_tol = std::min(options.gradient_tol, 1e-11);
  int iter = 0;
  bool converged = false;
  Eigen::MatrixXd jac;
  for (; iter < options.max_iterations; ++iter) {
    jac = fd_jacobian(residuals, p, num_residuals);
    const Eigen::VectorXd grad = jac.transpose() * r;
    result.gradient_norm = grad.cwiseAbs().maxCoeff();
    if (result.gradient_norm < stationary_tol) {
      converged = true;
      break;
    }

    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    bool stepped = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      for (int k = 0; k < n; ++k) damped(k, k) += lambda * std::max(jtj(k, k), 1e-12);
      const Eigen::VectorXd delta = damped.ldlt().solve(-grad);
      std::vector<double> cand = p;
      for (int k = 0; k < n; ++k) cand[static_cast<std::size_t>(k)] += delta(k);
      const Eigen::VectorXd rc = eval_residuals(residuals, cand, num_residuals);
      const double rss_c = rc.squaredNorm();
      if (std::isfinite(rss_c) && rss_c <= rss) {
        const double step_size = delta.cwiseAbs().maxCoeff();
        p = std::move(cand);
        r = rc;
        const double improvement = rss - rss_c;
        rss = rss_c;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        if (step_size < options.step_tol || improvement < 1e-18 * (1.0 + rss)) {
          converged = true;
        }
        break;
      }
      lambda *= 4.0;
    }
    if (!stepped || converged) {
      if (!stepped) {
        // No descent direction left; treat a tiny gradient as convergence.
        converged = result.gradient_norm < 1e-6;
      }
      break;
    }
  }

  result.values = p;
  result.rss = rss;
  result.iterations = iter;

  // Parameter covariance from (J^T J)^-1 with the caller's sigmas absolute.
  // The final gradient decides convergence, so converged really does imply a
  // gradient below tolerance.
  jac = fd_jacobian(residuals, p, num_residuals);
  result.gradient_norm = (jac.transpose() * r).cwiseAbs().maxCoeff();
  result.converged = converged && result.gradient_norm <= options.gradient_tol;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = std::max(sv(0), 1.0) * 1e-10;
  result.stderrs.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double var = 0.0;
    bool singular = false;
    for (int k = 0; k < n; ++k) {
      const double v = svd.matrixV()(j, k);
      if (sv(k) <= cutoff) {
        if (std::abs(v) > 1e-8) singular = true;
        continue;
      }
      var += (v / sv(k)) * (v / sv(k));
    }
    if (singular) {
      result.stderrs[static_cast<std::size_t>(j)] = kHugeStderr;
      result.identifiable = false;
    } else {
      result.stderrs[static_cast<std::size_t>(j)] = std::sqrt(var);
    }
  }
  return result;
}

FitResult least_squares(const ModelFn& model, const CurveData& data, std::vector<double> init,
                        std::vector<std::string> names, const FitOptions& options) {
  data.validate();
  const int m = static_cast<int>(data.x.size());
  ResidualFn resid = [&model, &data](std::span<const double> p, std::span<double> r) {
    for (std::size_t i = 0; i < data.x.size(); ++i)
      r[i] = (data.y[i] - model(data.x[i], p)) / data.sigma[i];
  };
  return least_squares_residuals(resid, m, std::move(init), std::move(names), options);
}

// --- insertion fitting -------------------------------------------------------

namespace {

double curvature_score(const std::vector<double>& y) {
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    sum += std::abs(y[i + 1] - 2.0 * y[i] + y[i - 1]);
  return sum;
}

double wrap_angle(double a) {
  while (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
  while (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

const std::vector<double>& curve_of(const InsertionCurves& c, CurveKind kind) {
  switch (kind) {
    case CurveKind::acceptance: return c.accept;
    case CurveKind::err_protected: return c.err_protected;
    case CurveKind::err_gauge: return c.err_gauge;
  }
  throw std::logic_error("curve_of: bad kind");
}

// delta from the acceptance curve: exact model a + b cos(theta + delta).
FitResult fit_cosine_with_offset(const CurveData& data) {
  const double mean = std::accumulate(data.y.begin(), data.y.end(), 0.0) /
                      static_cast<double>(data.y.size());
  const auto [lo, hi] = std::minmax_element(data.y.begin(), data.y.end());
  const double amp = std::max(0.5 * (*hi - *lo), 1e-6);
  const ModelFn model = [](double x, std::span<const double> p) {
    return p[0] + p[1] * std::cos(x + p[2]);
  };
  FitResult best;
  double best_rss = std::numeric_limits<double>::infinity();
  for (double start : {-2.2, -1.1, 0.0, 1.1, 2.2}) {
    FitResult r = least_squares(model, data, {mean, amp, start}, {"a", "b", "delta"});
    if (r.rss < best_rss) {
      best_rss = r.rss;
      best = r;
    }
  }
  return best;
}

// delta from an error curve: exact model (C + D cos) / (1 + B cos) of the
// conditional-error ratio.
FitResult fit_ratio_with_offset(const CurveData& data) {
  const double mean = std::accumulate(data.y.begin(), data.y.end(), 0.0) /
                      static_cast<double>(data.y.size());
  const auto [lo, hi] = std::minmax_element(data.y.begin(), data.y.end());
  const double amp = std::max(0.5 * (*hi - *lo), 1e-6);
  const ModelFn model = [](double x, std::span<const double> p) {
    return (p[0] + p[1] * std::cos(x + p[3])) / (1.0 + p[2] * std::cos(x + p[3]));
  };
  FitResult best;
  double best_rss = std::numeric_limits<double>::infinity();
  for (double start : {-2.2, -1.1, 0.0, 1.1, 2.2}) {
    for (double sign : {1.0, -1.0}) {
      FitResult r =
          least_squares(model, data, {mean, sign * amp, 0.0, start}, {"c", "d", "b", "delta"});
      if (r.rss < best_rss) {
        best_rss = r.rss;
        best = r;
      }
    }
  }
  return best;
}

}  // namespace

InsertionFit fit_insertion(const std::array<InsertionCurves, 3>& curves_by_location) {
  InsertionFit fit;
  for (std::size_t loc = 0; loc < 3; ++loc) {
    const InsertionCurves& curves = curves_by_location[loc];
    if (curves.theta.size() < 5)
      throw std::invalid_argument("fit_insertion: need at least 5 angles per location");
    InsertionLocationFit& out = fit.locations[loc];

    // Curvatures are compared on commensurate scales: the acceptance itself
    // and the error-curve numerators (conditional error times acceptance),
    // all of which follow u + v cos(theta + delta).
    std::vector<double> numer_p(curves.theta.size()), numer_g(curves.theta.size());
    for (std::size_t i = 0; i < curves.theta.size(); ++i) {
      numer_p[i] = curves.err_protected[i] * curves.accept[i];
      numer_g[i] = curves.err_gauge[i] * curves.accept[i];
    }
    const double curv_acc = curvature_score(curves.accept);
    const double curv_p = curvature_score(numer_p);
    const double curv_g = curvature_score(numer_g);
    const double curv_max = std::max({curv_acc, curv_p, curv_g});
    if (curv_max < 1e-9)
      throw std::invalid_argument("fit_insertion: all curves are flat; offset unidentifiable");
    out.delta_source = curv_acc == curv_max ? CurveKind::acceptance
                       : curv_p == curv_max ? CurveKind::err_protected
                                            : CurveKind::err_gauge;

    // Stage 1: offset from the designated curve, using that curve's exact
    // model class.
    const CurveData source_data = CurveData::unweighted(
        curves.theta, curve_of(curves, out.delta_source));
    const FitResult source_fit = out.delta_source == CurveKind::acceptance
                                     ? fit_cosine_with_offset(source_data)
                                     : fit_ratio_with_offset(source_data);
    double delta = wrap_angle(source_fit.value("delta"));
    // Systematic offsets are small; report delta in (-pi/2, pi/2]. The sign
    // flip this may imply lands in the cosine amplitudes, which are refitted
    // below with delta frozen.
    if (delta > std::numbers::pi / 2.0) {
      delta -= std::numbers::pi;
    } else if (delta <= -std::numbers::pi / 2.0) {
      delta += std::numbers::pi;
    }
    out.delta = delta;

    // Stage 2: acceptance amplitude with delta frozen (linear in a, b).
    const ModelFn acc_model = [delta](double x, std::span<const double> p) {
      return p[0] + p[1] * std::cos(x + delta);
    };
    const CurveData acc_data = CurveData::unweighted(curves.theta, curves.accept);
    const double acc_mean = std::accumulate(curves.accept.begin(), curves.accept.end(), 0.0) /
                            static_cast<double>(curves.accept.size());
    FitResult acc_fit = least_squares(acc_model, acc_data, {acc_mean, 0.0}, {"a", "b"});
    out.a = acc_fit.value("a");
    out.b = acc_fit.value("b");
    out.rss = acc_fit.rss;

    // Stage 3: error numerators against the fitted acceptance.
    const double a_hat = out.a, b_hat = out.b;
    const ModelFn err_model = [delta, a_hat, b_hat](double x, std::span<const double> p) {
      return (p[0] + p[1] * std::cos(x + delta)) / (a_hat + b_hat * std::cos(x + delta));
    };
    for (CurveKind kind : {CurveKind::err_protected, CurveKind::err_gauge}) {
      const std::vector<double>& ys = curve_of(curves, kind);
      const CurveData err_data = CurveData::unweighted(curves.theta, ys);
      const double mean = std::accumulate(ys.begin(), ys.end(), 0.0) /
                          static_cast<double>(ys.size());
      FitResult err_fit =
          least_squares(err_model, err_data, {mean * a_hat, 0.0}, {"c", "d"});
      out.rss += err_fit.rss;
      if (kind == CurveKind::err_protected) {
        out.c_protected = err_fit.value("c");
        out.d_protected = err_fit.value("d");
      } else {
        out.c_gauge = err_fit.value("c");
        out.d_gauge = err_fit.value("d");
      }
    }
  }
  return fit;
}

std::array<InsertionCurves, 3> insertion_curves_from_values(const InsertionValueSet& values,
                                                            const std::vector<double>& theta_grid) {
  std::array<InsertionCurves, 3> out;
  for (std::size_t loc = 0; loc < 3; ++loc) {
    InsertionCurves& c = out[loc];
    c.theta = theta_grid;
    for (double th : theta_grid) {
      const double phi = std::cos(th + values.delta[loc]);
      const double acc = values.a[loc] + values.b[loc] * phi;
      c.accept.push_back(acc);
      c.err_protected.push_back((values.c_protected[loc] + values.d_protected[loc] * phi) / acc);
      c.err_gauge.push_back((values.c_gauge[loc] + values.d_gauge[loc] * phi) / acc);
    }
  }
  return out;
}

InsertionValueSet to_value_set(const InsertionFit& fit) {
  InsertionValueSet v;
  for (std::size_t loc = 0; loc < 3; ++loc) {
    const InsertionLocationFit& f = fit.locations[loc];
    v.delta[loc] = f.delta;
    v.a[loc] = f.a;
    v.b[loc] = f.b;
    v.c_protected[loc] = f.c_protected;
    v.d_protected[loc] = f.d_protected;
    v.c_gauge[loc] = f.c_gauge;
    v.d_gauge[loc] = f.d_gauge;
  }
  return v;
}

// --- decay fitting ------------------------------------------------------------

DecayFit fit_decay(const DecayCurves& data, const std::array<double, 16>& init_mixture) {
  const std::size_t n = data.t_us.size();
  if (n < 4) throw std::invalid_argument("fit_decay: need at least 4 time points");
  if (data.p1_protected.size() != n || data.p1_gauge.size() != n)
    throw std::invalid_argument("fit_decay: series lengths do not match");
  const bool weighted = !data.sigma_protected.empty();
  if (weighted && (data.sigma_protected.size() != n || data.sigma_gauge.size() != n))
    throw std::invalid_argument("fit_decay: sigma lengths do not match");

  auto clamp_params = [](std::span<const double> p, analytic::DecayModelParams& out) {
    for (int q = 0; q < 4; ++q)
      out.t1_us[static_cast<std::size_t>(q)] = std::max(p[static_cast<std::size_t>(q)], 0.5);
    out.p0 = std::clamp(p[4], 0.0, 0.5);
    out.p1 = std::clamp(p[5], 0.0, 0.5);
  };

  analytic::DecayModelParams params;
  params.init_mixture = init_mixture;

  const ResidualFn resid = [&](std::span<const double> p, std::span<double> r) {
    analytic::DecayModelParams local = params;
    clamp_params(p, local);
    for (std::size_t i = 0; i < n; ++i) {
      const analytic::DecayPoint pt = analytic::decay_model(data.t_us[i], local);
      const double sp = weighted ? data.sigma_protected[i] : 1.0;
      const double sg = weighted ? data.sigma_gauge[i] : 1.0;
      r[2 * i] = (data.p1_protected[i] - pt.p1_protected) / sp;
      r[2 * i + 1] = (data.p1_gauge[i] - pt.p1_gauge) / sg;
    }
  };

  // The ideal-readout limit of the model depends on the T1s only through the
  // bitstring-pair survivals, so symmetric starting points sit on a shallow
  // ridge; the start list deliberately breaks the (D1,D4)/(D2,D3) pairing.
  const std::vector<std::string> names{"t1_d1", "t1_d2", "t1_d3", "t1_d4", "p0", "p1"};
  static const std::array<std::array<double, 6>, 5> kStarts{{
      {70.0, 70.0, 70.0, 70.0, 0.03, 0.03},
      {50.0, 80.0, 90.0, 70.0, 0.04, 0.02},
      {90.0, 60.0, 70.0, 110.0, 0.02, 0.04},
      {40.0, 100.0, 60.0, 90.0, 0.06, 0.01},
      {110.0, 50.0, 100.0, 45.0, 0.01, 0.05},
  }};
  FitResult best;
  double best_rss = std::numeric_limits<double>::infinity();
  for (const auto& start : kStarts) {
    FitResult r = least_squares_residuals(resid, static_cast<int>(2 * n),
                                          {start.begin(), start.end()}, names);
    if (r.rss < best_rss) {
      best_rss = r.rss;
      best = r;
      if (best_rss < 1e-16) break;
    }
  }
  if (!best.converged && best.gradient_norm > 1e-4)
    throw std::runtime_error("fit_decay: optimizer failed to converge");

  DecayFit out;
  analytic::DecayModelParams fitted;
  clamp_params(best.values, fitted);
  out.t1_us = fitted.t1_us;
  out.p0 = fitted.p0;
  out.p1 = fitted.p1;
  out.details = std::move(best);
  return out;
}

FitResult fit_single_t1(const CurveData& data, double init_t1_us) {
  const ModelFn model = [](double t, std::span<const double> p) {
    return analytic::ideal_decay(t, std::max(p[0], 0.5));
  };
  return least_squares(model, data, {init_t1_us}, {"t1_us"});
}

// --- model matching ------------------------------------------------------------

namespace {

double match_objective(const InsertionValueSet& fitted, double p0, double p1) {
  // The reported match pairs the reported coefficient family with the
  // reported fitted values.
  const analytic::InsertionCoefficients ka =
      analytic::reported_insertion_coefficients(analytic::Location::a, p0, p1);
  const analytic::InsertionCoefficients kb =
      analytic::reported_insertion_coefficients(analytic::Location::b, p0, p1);
  double sum = 0.0;
  for (std::size_t loc = 0; loc < 3; ++loc) {
    const analytic::InsertionCoefficients& k = loc == 1 ? kb : ka;
    sum += std::abs(k.a - fitted.a[loc]);
    sum += std::abs(k.b - fitted.b[loc]);
    sum += std::abs(k.c_protected - fitted.c_protected[loc]);
    sum += std::abs(k.d_protected - fitted.d_protected[loc]);
    sum += std::abs(k.c_gauge - fitted.c_gauge[loc]);
    sum += std::abs(k.d_gauge - fitted.d_gauge[loc]);
  }
  return sum;
}

}  // namespace

MatchResult match_model_params(const InsertionValueSet& fitted) {
  // The uniform-readout statistics are invariant under complementing every
  // outcome string, which exchanges p0 and p1, so the objective is exactly
  // symmetric; the search reports the p0 >= p1 representative.
  double best_p0 = 0.0, best_p1 = 0.0;
  double best = std::numeric_limits<double>::infinity();
  double step = 0.0025;
  auto scan = [&](double lo0, double hi0, double lo1, double hi1, double s) {
    for (double p0 = lo0; p0 <= hi0 + 1e-12; p0 += s) {
      for (double p1 = lo1; p1 <= std::min(hi1, p0) + 1e-12; p1 += s) {
        const double v = match_objective(fitted, p0, p1);
        if (v < best) {
          best = v;
          best_p0 = p0;
          best_p1 = p1;
        }
      }
    }
  };
  scan(0.0, 0.5, 0.0, 0.5, step);
  for (int level = 0; level < 3; ++level) {
    const double radius = step * 2.0;
    step /= 10.0;
    scan(std::max(0.0, best_p0 - radius), std::min(0.5, best_p0 + radius),
         std::max(0.0, best_p1 - radius), std::min(0.5, best_p1 + radius), step);
  }

  MatchResult result;
  result.p0 = best_p0;
  result.p1 = best_p1;
  result.objective = best;
  result.on_boundary = best_p0 < 1e-4 || best_p0 > 0.5 - 1e-4 || best_p1 < 1e-4 ||
                       best_p1 > 0.5 - 1e-4;
  return result;
}

}  // namespace ft422::fit
