// SPDX-License-Identifier: Apache-2.0
//
// Experiment harness for the four-qubit error-detecting code: runs the
// preparation, error-insertion, free-evolution and tomography pipelines and
// writes their data files; the fit subcommand recovers model parameters from
// curve files. Exit codes: 0 success, 2 configuration error, 3 numerical
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "ft422/csv.hpp"
#include "ft422/parallel.hpp"
#include "ft422/pipelines.hpp"
#include "ft422/reference_data.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ft422;

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> shots;
  std::optional<std::string> out_dir;
  bool exact = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "Configuration file (key = value)");
  cmd->add_option("--seed", args.seed, "Override the RNG seed");
  cmd->add_option("--shots", args.shots, "Override the shot count");
  cmd->add_option("--out", args.out_dir, "Output directory");
  cmd->add_flag("--exact", args.exact, "Skip sampling; use exact statistics");
}

ExperimentConfig resolve_config(const CommonArgs& args) {
  ExperimentConfig cfg =
      args.config_path.empty() ? ExperimentConfig::defaults() : load_config(args.config_path);
  if (args.seed) cfg.seed = *args.seed;
  if (args.shots) {
    if (*args.shots < 1) throw ConfigError("shots must be >= 1");
    cfg.shots = *args.shots;
    cfg.tomo_shots_per_setting = static_cast<int>(*args.shots);
  }
  if (args.out_dir) cfg.out_dir = *args.out_dir;
  cfg.validate();
  return cfg;
}

fs::path ensure_out_dir(const ExperimentConfig& cfg) {
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  return dir;
}

void save_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

json summary_to_json(const PostSelSummary& s) {
  json j{{"total_shots", s.total_shots},
         {"total_syndrome_ok", s.total_syndrome_ok},
         {"accepted", s.accepted},
         {"acceptance", s.acceptance},
         {"acceptance_se", s.se_acceptance}};
  if (s.errors) {
    j["err_protected"] = s.errors->p_err_protected;
    j["err_gauge"] = s.errors->p_err_gauge;
    j["err_joint"] = s.errors->p_err_joint;
    j["err_protected_se"] = s.errors->se_protected;
    j["err_gauge_se"] = s.errors->se_gauge;
    j["err_joint_se"] = s.errors->se_joint;
  } else {
    j["errors_defined"] = false;
  }
  return j;
}

double marginal_parity_one(const PostSelSummary& s, int expected, bool protected_side) {
  if (!s.errors) return 0.0;
  const double flip = (protected_side ? s.errors->p_err_protected : s.errors->p_err_gauge) +
                      s.errors->p_err_joint;
  return expected == 1 ? 1.0 - flip : flip;
}

// --- subcommands --------------------------------------------------------------

int cmd_prep(const CommonArgs& args) {
  const ExperimentConfig cfg = resolve_config(args);
  const fs::path dir = ensure_out_dir(cfg);
  const pipelines::PrepResult result =
      pipelines::run_prep(cfg.target, cfg.noise, cfg.shots, cfg.seed, args.exact);

  if (!args.exact) {
    csv::write_shots((dir / "prep_shots.csv").string(), result.shots);
    // Aggregated outcome histogram.
    std::array<long, 32> counts{};
    for (const ShotRecord& s : result.shots) ++counts[s.outcome()];
    csv::Writer counts_csv({"cs", "c1", "c2", "c3", "c4", "count"});
    for (std::uint32_t outcome = 0; outcome < 32; ++outcome) {
      const ShotRecord r = ShotRecord::from_outcome(outcome, cfg.target.basis);
      counts_csv.add_row({static_cast<double>(r.c_s), static_cast<double>(r.c[0]),
                          static_cast<double>(r.c[1]), static_cast<double>(r.c[2]),
                          static_cast<double>(r.c[3]), static_cast<double>(counts[outcome])});
    }
    counts_csv.save((dir / "prep_counts.csv").string());
  }

  json j{{"target", cfg.target.to_string()},
         {"seed", cfg.seed},
         {"shots", cfg.shots},
         {"postsel", summary_to_json(result.sampled)},
         {"postsel_exact", summary_to_json(result.exact)},
         {"acceptance", result.metrics.acceptance},
         {"table_row",
          {{"acceptance", result.table_row.acceptance},
           {"populations", result.table_row.populations}}}};
  if (result.metrics.fidelity) j["fidelity"] = *result.metrics.fidelity;
  save_text(dir / "prep_metrics.json", j.dump(2) + "\n");
  std::cout << "prep " << cfg.target.to_string() << ": acceptance " << result.exact.acceptance
            << ", wrote " << (dir / "prep_metrics.json").string() << "\n";
  return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& site_name) {
  const ExperimentConfig cfg = resolve_config(args);
  const fs::path dir = ensure_out_dir(cfg);
  const pipelines::SweepSite site = pipelines::sweep_site_from_string(site_name);

  // Sweep points run on a worker pool; rows are emitted in grid order.
  std::vector<pipelines::SweepPoint> points(cfg.theta_grid_rad.size());
  parallel_for_index(points.size(), [&](std::size_t i) {
    points[i] = pipelines::run_sweep_point(cfg.target, site, cfg.theta_grid_rad[i], cfg.noise,
                                           cfg.shots, cfg.seed + i, args.exact);
  });

  csv::Writer w({"theta", "accept", "accept_se", "err_protected", "err_protected_se", "err_gauge",
                 "err_gauge_se", "err_joint", "err_joint_se", "exact_accept",
                 "exact_err_protected", "exact_err_gauge", "exact_err_joint"});
  for (const pipelines::SweepPoint& p : points) {
    const ConditionalErrors se = p.sampled.errors.value_or(ConditionalErrors{});
    const ConditionalErrors ee = p.exact.errors.value_or(ConditionalErrors{});
    w.add_row({p.theta, p.sampled.acceptance, p.sampled.se_acceptance, se.p_err_protected,
               se.se_protected, se.p_err_gauge, se.se_gauge, se.p_err_joint, se.se_joint,
               p.exact.acceptance, ee.p_err_protected, ee.p_err_gauge, ee.p_err_joint});
  }
  const fs::path path = dir / (std::string("sweep_") + pipelines::to_string(site) + ".csv");
  w.save(path.string());
  std::cout << "sweep " << pipelines::to_string(site) << ": " << cfg.theta_grid_rad.size()
            << " angles, wrote " << path.string() << "\n";
  return 0;
}

int cmd_decay(const CommonArgs& args, const std::string& state_name, bool echo) {
  const ExperimentConfig cfg = resolve_config(args);
  const fs::path dir = ensure_out_dir(cfg);
  pipelines::DecayState state;
  if (state_name == "11")
    state = pipelines::DecayState::z11;
  else if (state_name == "pp")
    state = pipelines::DecayState::pp;
  else
    throw ConfigError("decay state must be 11 or pp");

  const EchoSequence echo_seq = echo ? EchoSequence::midpoint_x : EchoSequence::none;
  const bool z_basis = state == pipelines::DecayState::z11;

  std::vector<std::string> header{"t_us", "accept", "accept_se"};
  if (z_basis) {
    for (const char* c : {"p1_protected", "p1_protected_se", "p1_gauge", "p1_gauge_se",
                          "exact_accept", "exact_p1_protected", "exact_p1_gauge", "model_accept",
                          "model_p1_protected", "model_p1_gauge"})
      header.push_back(c);
  } else {
    for (const char* c : {"x_protected", "x_protected_se", "x_gauge", "x_gauge_se", "exact_accept",
                          "exact_x_protected", "exact_x_gauge"})
      header.push_back(c);
  }
  csv::Writer w(header);

  const PrepTarget target = z_basis ? PrepTarget::z(1, 1) : PrepTarget::x(0, 0);
  const int exp_p = target.expected_protected_parity();
  const int exp_g = target.expected_gauge_parity();
  for (std::size_t i = 0; i < cfg.t_grid_us.size(); ++i) {
    const pipelines::DecayPointResult p = pipelines::run_decay_point(
        state, cfg.t_grid_us[i], cfg.noise, echo_seq, cfg.shots, cfg.seed + i,
        cfg.trotter_slices, args.exact);
    const ConditionalErrors se = p.sampled.errors.value_or(ConditionalErrors{});
    if (z_basis) {
      const double mp = marginal_parity_one(p.sampled, exp_p, true);
      const double mg = marginal_parity_one(p.sampled, exp_g, false);
      const double sp = std::sqrt(se.se_protected * se.se_protected + se.se_joint * se.se_joint);
      const double sg = std::sqrt(se.se_gauge * se.se_gauge + se.se_joint * se.se_joint);
      w.add_row({p.t_us, p.sampled.acceptance, p.sampled.se_acceptance, mp, sp, mg, sg,
                 p.exact.acceptance, marginal_parity_one(p.exact, exp_p, true),
                 marginal_parity_one(p.exact, exp_g, false), p.model.acceptance,
                 p.model.p1_protected, p.model.p1_gauge});
    } else {
      const double xp = 1.0 - 2.0 * marginal_parity_one(p.sampled, exp_p, true);
      const double xg = 1.0 - 2.0 * marginal_parity_one(p.sampled, exp_g, false);
      const double sp =
          2.0 * std::sqrt(se.se_protected * se.se_protected + se.se_joint * se.se_joint);
      const double sg = 2.0 * std::sqrt(se.se_gauge * se.se_gauge + se.se_joint * se.se_joint);
      w.add_row({p.t_us, p.sampled.acceptance, p.sampled.se_acceptance, xp, sp, xg, sg,
                 p.exact.acceptance, 1.0 - 2.0 * marginal_parity_one(p.exact, exp_p, true),
                 1.0 - 2.0 * marginal_parity_one(p.exact, exp_g, false)});
    }
  }
  const fs::path path =
      dir / (std::string("decay_") + state_name + (echo ? "_echo" : "") + ".csv");
  w.save(path.string());
  std::cout << "decay " << state_name << (echo ? " (echo)" : "") << ": "
            << cfg.t_grid_us.size() << " times, wrote " << path.string() << "\n";
  return 0;
}

int cmd_tomo(const CommonArgs& args) {
  const ExperimentConfig cfg = resolve_config(args);
  const fs::path dir = ensure_out_dir(cfg);
  const pipelines::TomoResult result = pipelines::run_tomo(
      cfg.target, cfg.noise, cfg.tomo_shots_per_setting, cfg.seed, args.exact);

  csv::write_tomo((dir / "tomo_counts.csv").string(), result.dataset);

  // Reconstructed density matrix: dimensions then rows of re/im pairs.
  std::string rho_text = "16 16\n";
  char buf[64];
  const Matrix rho = result.reconstructed.density_matrix();
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      std::snprintf(buf, sizeof buf, c ? " %.12g %.12g" : "%.12g %.12g", rho(r, c).real(),
                    rho(r, c).imag());
      rho_text += buf;
    }
    rho_text += '\n';
  }
  save_text(dir / "tomo_rho.txt", rho_text);

  // Difference matrix in the logical basis; row/column labels l1l2_szsx.
  std::vector<std::string> header{"label"};
  for (int idx = 0; idx < 16; ++idx) {
    const auto label = code422::LogicalLabel::from_index(idx);
    header.push_back(std::to_string(label.l1) + std::to_string(label.l2) + "_" +
                     std::to_string(label.s_z) + std::to_string(label.s_x));
  }
  csv::Writer diff(header);
  for (int r = 0; r < 16; ++r) {
    std::vector<std::string> cells{header[static_cast<std::size_t>(r + 1)]};
    for (int c = 0; c < 16; ++c) {
      std::snprintf(buf, sizeof buf, "%.12g", result.difference(r, c));
      cells.emplace_back(buf);
    }
    diff.add_text_row(cells);
  }
  diff.save((dir / "tomo_diff.csv").string());

  json j{{"target", cfg.target.to_string()},
         {"shots_per_setting", cfg.tomo_shots_per_setting},
         {"exact", args.exact},
         {"acceptance", result.table_row.acceptance},
         {"populations", result.table_row.populations}};
  save_text(dir / "tomo_metrics.json", j.dump(2) + "\n");
  std::cout << "tomo " << cfg.target.to_string() << ": acceptance "
            << result.table_row.acceptance << ", wrote " << (dir / "tomo_metrics.json").string()
            << "\n";
  return 0;
}

fit::InsertionCurves read_sweep_curves(const std::string& path, bool exact_columns) {
  const csv::Table t = csv::read_table(path);
  fit::InsertionCurves c;
  c.theta = t.numeric_column("theta");
  if (exact_columns) {
    c.accept = t.numeric_column("exact_accept");
    c.err_protected = t.numeric_column("exact_err_protected");
    c.err_gauge = t.numeric_column("exact_err_gauge");
  } else {
    c.accept = t.numeric_column("accept");
    c.err_protected = t.numeric_column("err_protected");
    c.err_gauge = t.numeric_column("err_gauge");
  }
  return c;
}

json location_to_json(const fit::InsertionLocationFit& f) {
  const char* source = f.delta_source == fit::CurveKind::acceptance     ? "acceptance"
                       : f.delta_source == fit::CurveKind::err_protected ? "err_protected"
                                                                         : "err_gauge";
  return json{{"delta", f.delta},
              {"a", f.a},
              {"b", f.b},
              {"c_protected", f.c_protected},
              {"d_protected", f.d_protected},
              {"c_gauge", f.c_gauge},
              {"d_gauge", f.d_gauge},
              {"delta_source", source},
              {"rss", f.rss}};
}

int cmd_fit(const CommonArgs& args, const std::string& kind,
            const std::vector<std::string>& inputs, const std::string& mixture_path) {
  const ExperimentConfig cfg = resolve_config(args);
  const fs::path dir = ensure_out_dir(cfg);

  json out;
  if (kind == "insertion") {
    if (inputs.size() != 3)
      throw ConfigError("fit insertion needs three sweep CSVs (locations A, B, C)");
    std::array<fit::InsertionCurves, 3> curves;
    for (std::size_t i = 0; i < 3; ++i) curves[i] = read_sweep_curves(inputs[i], args.exact);
    const fit::InsertionFit f = fit::fit_insertion(curves);
    out = json{{"kind", "insertion"},
               {"locations",
                {{"A", location_to_json(f.locations[0])},
                 {"B", location_to_json(f.locations[1])},
                 {"C", location_to_json(f.locations[2])}}}};
  } else if (kind == "decay") {
    if (inputs.size() != 1) throw ConfigError("fit decay needs one decay CSV");
    const csv::Table t = csv::read_table(inputs[0]);
    fit::DecayCurves d;
    d.t_us = t.numeric_column("t_us");
    if (args.exact) {
      d.p1_protected = t.numeric_column("exact_p1_protected");
      d.p1_gauge = t.numeric_column("exact_p1_gauge");
    } else {
      d.p1_protected = t.numeric_column("p1_protected");
      d.p1_gauge = t.numeric_column("p1_gauge");
      d.sigma_protected = t.numeric_column("p1_protected_se");
      d.sigma_gauge = t.numeric_column("p1_gauge_se");
      for (double s : d.sigma_protected)
        if (s <= 0.0) {  // exact columns masquerading as samples
          d.sigma_protected.clear();
          d.sigma_gauge.clear();
          break;
        }
    }
    std::array<double, 16> mixture{};
    mixture[code422::LogicalLabel{1, 1, 0, 0}.index()] = 1.0;
    if (!mixture_path.empty()) {
      std::ifstream in(mixture_path);
      if (!in) throw ConfigError("cannot open mixture file " + mixture_path);
      for (double& m : mixture)
        if (!(in >> m)) throw ConfigError("mixture file must hold 16 weights");
    }
    const fit::DecayFit f = fit::fit_decay(d, mixture);
    out = json{{"kind", "decay"},
               {"t1_us", f.t1_us},
               {"p0", f.p0},
               {"p1", f.p1},
               {"rss", f.details.rss},
               {"converged", f.details.converged},
               {"stderr", f.details.stderrs}};
  } else if (kind == "match") {
    if (inputs.size() != 1) throw ConfigError("fit match needs one insertion-fit JSON");
    std::ifstream in(inputs[0]);
    if (!in) throw ConfigError("cannot open " + inputs[0]);
    json fitted_json;
    try {
      in >> fitted_json;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad JSON: ") + e.what());
    }
    fit::InsertionValueSet values;
    static const char* kLoc[3] = {"A", "B", "C"};
    try {
      for (std::size_t i = 0; i < 3; ++i) {
        const json& loc = fitted_json.at("locations").at(kLoc[i]);
        values.delta[i] = loc.at("delta");
        values.a[i] = loc.at("a");
        values.b[i] = loc.at("b");
        values.c_protected[i] = loc.at("c_protected");
        values.d_protected[i] = loc.at("d_protected");
        values.c_gauge[i] = loc.at("c_gauge");
        values.d_gauge[i] = loc.at("d_gauge");
      }
    } catch (const std::exception& e) {
      throw ConfigError(std::string("insertion-fit JSON missing fields: ") + e.what());
    }
    const fit::MatchResult m = fit::match_model_params(values);
    out = json{{"kind", "match"},
               {"p0", m.p0},
               {"p1", m.p1},
               {"objective", m.objective},
               {"on_boundary", m.on_boundary}};
  } else {
    throw ConfigError("fit kind must be insertion, decay or match");
  }

  const fs::path path = dir / ("fit_" + kind + ".json");
  save_text(path, out.dump(2) + "\n");
  std::cout << "fit " << kind << ": wrote " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and analysis toolkit for fault-tolerant state preparation on the "
               "[[4,2,2]] error-detecting code"};
  app.require_subcommand(1);

  CommonArgs prep_args;
  CLI::App* prep = app.add_subcommand("prep", "Run state preparation and post-selection");
  add_common(prep, prep_args);

  CommonArgs sweep_args;
  std::string site = "A";
  CLI::App* sweep = app.add_subcommand("sweep", "Error-insertion angle sweep");
  add_common(sweep, sweep_args);
  sweep->add_option("--site", site, "Insertion site: A, B, C or yy")->required();

  CommonArgs decay_args;
  std::string state = "11";
  bool echo = false;
  CLI::App* decay = app.add_subcommand("decay", "Free-evolution lifetime scan");
  add_common(decay, decay_args);
  decay->add_option("--state", state, "Encoded state: 11 or pp");
  decay->add_flag("--echo", echo, "Midpoint-X echo during the idle");

  CommonArgs tomo_args;
  CLI::App* tomo_cmd = app.add_subcommand("tomo", "Simulated state tomography");
  add_common(tomo_cmd, tomo_args);

  CommonArgs fit_args;
  std::string fit_kind;
  std::vector<std::string> fit_inputs;
  std::string mixture_path;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit models to curve files");
  add_common(fit_cmd, fit_args);
  fit_cmd->add_option("kind", fit_kind, "insertion, decay or match")->required();
  fit_cmd->add_option("inputs", fit_inputs, "Input data files");
  fit_cmd->add_option("--mixture", mixture_path, "Initial-mixture file (16 weights)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prep->parsed()) return cmd_prep(prep_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args, site);
    if (decay->parsed()) return cmd_decay(decay_args, state, echo);
    if (tomo_cmd->parsed()) return cmd_tomo(tomo_args);
    if (fit_cmd->parsed()) return cmd_fit(fit_args, fit_kind, fit_inputs, mixture_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
