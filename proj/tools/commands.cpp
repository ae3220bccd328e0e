#include "commands.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <vector>

#include "mevac/lagrangian.hpp"
#include "mevac/momentum.hpp"
#include "mevac/relativity.hpp"
#include "mevac/vacuum.hpp"

namespace mevac::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_sweep_parameter(const RunConfig& cfg, std::string_view command,
                             std::initializer_list<std::string_view> allowed) {
  if (!cfg.sweep) {
    return;
  }
  for (const auto p : allowed) {
    if (cfg.sweep->parameter == p) {
      return;
    }
  }
  throw ConfigError("sweep.parameter: '" + cfg.sweep->parameter + "' is not supported by " +
                    std::string(command));
}

void warn_longitudinal(const RunConfig& cfg, std::ostream& err) {
  if (cfg.fields && has_longitudinal_component(make_fields(cfg))) {
    err << "warning: E or B has a z component above 1e-9 of its transverse magnitude; "
           "the boosted constants only describe transverse components\n";
  }
}

void emit(std::ostream& out, const Table& table, const Options& opts, std::string_view command,
          const RunConfig& cfg) {
  write_table(out, table, opts.format, command, to_json(cfg));
}

std::vector<Cell> vec_cells(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

void append(std::vector<Cell>& row, const std::vector<Cell>& more) { row.insert(row.end(), more.begin(), more.end()); }

double opt_or_nan(const std::optional<double>& x) { return x ? *x : kNaN; }

}  // namespace

void apply_overrides(RunConfig& cfg, std::optional<double> beta, std::optional<double> cutoff) {
  if (beta) {
    if (!std::isfinite(*beta)) {
      throw ConfigError("--beta: must be finite");
    }
    cfg.boost = BoostConfig{*beta};
  }
  if (cutoff) {
    if (!cfg.vacuum) {
      throw ConfigError("--cutoff: config has no vacuum section");
    }
    if (!(*cutoff > 0.0) || !std::isfinite(*cutoff)) {
      throw ConfigError("--cutoff: must be finite and > 0");
    }
    cfg.vacuum->cutoff = *cutoff;
  }
}

int cmd_transform(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err) {
  require_sweep_parameter(cfg, "transform", {"beta"});
  warn_longitudinal(cfg, err);
  std::vector<double> betas;
  if (cfg.sweep) {
    betas = cfg.sweep->values;
  } else if (cfg.boost) {
    betas = {cfg.boost->beta};
  } else {
    throw ConfigError("boost: missing (required by transform)");
  }
  const Materiald m = make_material(cfg);

  Table table{{"beta", "epsilon_prime", "mu_prime", "index_prime", "impedance_ratio", "impedance_rel_delta",
               "index_delta"},
              {}};
  for (const double beta : betas) {
    const BoostSpecd boost(beta);
    const auto tc = transform_constants(m, boost);
    const double ratio = tc.epsilon_prime / tc.mu_prime;
    const double n_prime = index_of(tc);
    table.add_row({beta, tc.epsilon_prime, tc.mu_prime, n_prime, ratio,
                   (ratio - m.impedance_ratio()) / m.impedance_ratio(), n_prime - boosted_index(m.index(), beta)});
  }
  emit(out, table, opts, "transform", cfg);
  return kExitOk;
}

int cmd_expand_check(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err) {
  require_sweep_parameter(cfg, "expand-check", {"beta"});
  warn_longitudinal(cfg, err);
  const Materiald m = make_material(cfg);
  const FieldStated f = make_fields(cfg);
  const std::vector<double> grid = cfg.sweep ? cfg.sweep->values : default_beta_grid();
  const ExpansionReport report = verify_expansion(m, f, grid);

  Table table{{"beta", "exact", "first_order", "residual", "zeroth", "mixing", "mu_correction", "slope",
               "identically_zero", "derivative_fd", "derivative_expected", "derivative_rel_delta", "status"},
              {}};
  const std::string status = report.passed() ? "pass" : "fail";
  for (std::size_t i = 0; i < report.betas.size(); ++i) {
    const auto pieces = me_density_first_order(m, f, BoostSpecd(report.betas[i]));
    table.add_row({report.betas[i], report.exact[i], report.first_order[i], report.residuals[i], pieces.zeroth,
                   pieces.mixing, pieces.mu_correction, opt_or_nan(report.slope), report.identically_zero,
                   report.derivative_fd, report.derivative_expected, report.derivative_relative(), status});
  }
  emit(out, table, opts, "expand-check", cfg);
  if (!report.passed()) {
    if (!report.identically_zero && !report.slope_ok()) {
      err << "expand-check: residual slope " << format_double(opt_or_nan(report.slope)) << " outside ["
          << ExpansionReport::kSlopeLow << ", " << ExpansionReport::kSlopeHigh << "]\n";
    }
    if (!report.derivative_ok()) {
      err << "expand-check: derivative check relative delta " << format_double(report.derivative_relative())
          << " exceeds " << ExpansionReport::kDerivativeTolerance << "\n";
    }
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_velocity(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err) {
  if (cfg.sweep) {
    throw ConfigError("sweep: not supported by velocity");
  }
  const Materiald m = make_material(cfg);
  std::string source;
  VelocityResult<double> r;
  if (cfg.vacuum) {
    const auto& vc = *cfg.vacuum;
    const ModeSet ms = build_mode_set(m, vc.grid_n, vc.cutoff, vc.volume);
    r = medium_velocity(m, vacuum_bilinears(ms, m, opts.workers).sums);
    source = "vacuum";
  } else {
    warn_longitudinal(cfg, err);
    r = medium_velocity(m, make_fields(cfg));
    source = "classical";
  }
  double ratio = kNaN;
  try {
    ratio = term_ratio(r);
  } catch (const DivisionDegenerate&) {
    err << "velocity: bracketed z-terms vanish, term_ratio reported as nan\n";
  }

  Table table{{"source", "v_z", "rhs_x", "rhs_y", "rhs_z", "am_x", "am_y", "am_z", "chi_e_x", "chi_e_y", "chi_e_z",
               "chi_b_x", "chi_b_y", "chi_b_z", "index_mismatch_term_z", "term_ratio", "transverse_residual"},
              {}};
  std::vector<Cell> row{source, r.v_z};
  append(row, vec_cells(r.rhs_vector));
  append(row, vec_cells(r.abraham_minkowski_term));
  append(row, vec_cells(r.chi_E_term));
  append(row, vec_cells(r.chi_B_term));
  append(row, {r.index_mismatch_term_z, ratio, r.transverse_residual});
  table.add_row(std::move(row));
  emit(out, table, opts, "velocity", cfg);
  return kExitOk;
}

int cmd_vacuum_sweep(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& /*err*/) {
  if (!cfg.vacuum) {
    throw ConfigError("vacuum: missing (required by vacuum-sweep)");
  }
  if (!cfg.sweep) {
    throw ConfigError("sweep: missing (vacuum-sweep needs parameter cutoff or grid_n)");
  }
  require_sweep_parameter(cfg, "vacuum-sweep", {"cutoff", "grid_n"});
  const Materiald m = make_material(cfg);
  const auto& vc = *cfg.vacuum;
  const auto& sweep = *cfg.sweep;

  std::vector<CutoffPoint> points;
  CutoffSlopes slopes;
  if (sweep.parameter == "cutoff") {
    auto result = cutoff_sweep(m, vc.grid_n, sweep.values, vc.volume, opts.workers);
    points = std::move(result.points);
    slopes = result.slopes;
  } else {
    for (const double g : sweep.values) {
      const int grid_n = static_cast<int>(g);
      const ModeSet ms = build_mode_set(m, grid_n, vc.cutoff, vc.volume);
      points.push_back({vc.cutoff, grid_n, vacuum_bilinears(ms, m, opts.workers)});
    }
  }

  Table table{{"parameter", "value", "cutoff", "grid_n", "mode_count", "exb_x", "exb_y", "exb_z", "echite_x",
               "echite_y", "echite_z", "bchib_x", "bchib_y", "bchib_z", "bchite", "slope_exb", "slope_echite",
               "slope_bchib", "slope_bchite", "rel_change_exb", "rel_change_echite", "rel_change_bchib",
               "rel_change_bchite"},
              {}};
  const auto magnitudes = [](const BilinearSums& b) {
    return std::array<double, 4>{b.sums.e_cross_b.norm(), b.sums.e_cross_chit_e.norm(), b.sums.b_cross_chi_b.norm(),
                                 std::abs(b.sums.b_chit_e)};
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const auto& s = p.bilinears.sums;
    std::vector<Cell> row{sweep.parameter, sweep.values[i], p.cutoff, static_cast<long long>(p.grid_n),
                          static_cast<long long>(p.bilinears.mode_count)};
    append(row, vec_cells(s.e_cross_b));
    append(row, vec_cells(s.e_cross_chit_e));
    append(row, vec_cells(s.b_cross_chi_b));
    append(row, {s.b_chit_e, opt_or_nan(slopes.e_cross_b), opt_or_nan(slopes.e_cross_chit_e),
                 opt_or_nan(slopes.b_cross_chi_b), opt_or_nan(slopes.b_chit_e)});
    const auto now = magnitudes(p.bilinears);
    for (std::size_t c = 0; c < 4; ++c) {
      double change = kNaN;
      if (i > 0 && now[c] > 0.0) {
        change = std::abs(now[c] - magnitudes(points[i - 1].bilinears)[c]) / now[c];
      }
      row.emplace_back(change);
    }
    table.add_row(std::move(row));
  }
  emit(out, table, opts, "vacuum-sweep", cfg);
  return kExitOk;
}

int run_command(std::string_view name, const RunConfig& cfg, const Options& opts, std::ostream& out,
                std::ostream& err) {
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (name == "transform") {
      code = cmd_transform(cfg, opts, buffer, err);
    } else if (name == "expand-check") {
      code = cmd_expand_check(cfg, opts, buffer, err);
    } else if (name == "velocity") {
      code = cmd_velocity(cfg, opts, buffer, err);
    } else if (name == "vacuum-sweep") {
      code = cmd_vacuum_sweep(cfg, opts, buffer, err);
    } else {
      err << "error: unknown command '" << name << "'\n";
      return kExitConfigError;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DegenerateBoost& e) {
    err << "degenerate boost: " << e.what() << '\n';
    return kExitDegenerateBoost;
  } catch (const EmptyModeSet& e) {
    err << "empty mode set: " << e.what() << '\n';
    return kExitEmptyModeSet;
  } catch (const Error& e) {
    // InvalidArgument, DegenerateGrid: bad values that passed the schema.
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  out << buffer.str();
  return code;
}

}  // namespace mevac::cli
