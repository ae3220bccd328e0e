#include "mevac/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "mevac/fit.hpp"

namespace mevac {

double ExpansionReport::derivative_relative() const {
  if (derivative_scale == 0.0) {
    return derivative_delta == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return derivative_delta / derivative_scale;
}

bool ExpansionReport::slope_ok() const {
  return slope.has_value() && *slope >= kSlopeLow && *slope <= kSlopeHigh;
}

bool ExpansionReport::derivative_ok() const { return derivative_relative() <= kDerivativeTolerance; }

bool ExpansionReport::passed() const { return (identically_zero || slope_ok()) && derivative_ok(); }

std::vector<double> default_beta_grid() { return {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}; }

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.size() < 3) {
    throw DegenerateGrid("beta grid needs at least 3 points, got " + std::to_string(grid.size()));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !(grid[i] <= 0.1)) {
      throw DegenerateGrid("beta grid values must lie in (0, 0.1]");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DegenerateGrid("beta grid must be strictly increasing");
    }
  }
}

}  // namespace

ExpansionReport verify_expansion(const Materiald& m, const FieldStated& f, std::span<const double> beta_grid) {
  check_grid(beta_grid);

  ExpansionReport report;
  report.betas.assign(beta_grid.begin(), beta_grid.end());
  for (const double beta : beta_grid) {
    const BoostSpecd boost(beta);
    const double exact = me_density_exact(m, f, boost);
    const double first = me_density_first_order(m, f, boost).total_first_order;
    report.exact.push_back(exact);
    report.first_order.push_back(first);
    report.residuals.push_back(std::abs(exact - first));
  }

  report.identically_zero =
      std::all_of(report.residuals.begin(), report.residuals.end(), [](double r) { return r == 0.0; });
  if (!report.identically_zero) {
    report.slope = log_log_slope(report.betas, report.residuals);
  }

  const double h = ExpansionReport::kDerivativeStep;
  report.derivative_fd =
      (me_density_exact(m, f, BoostSpecd(h)) - me_density_exact(m, f, BoostSpecd(-h))) / (2.0 * h);
  const double beta0 = beta_grid.front();
  const auto pieces = me_density_first_order(m, f, BoostSpecd(beta0));
  report.derivative_expected = (pieces.mixing + pieces.mu_correction) / beta0;
  report.derivative_delta = std::abs(report.derivative_fd - report.derivative_expected);
  report.derivative_scale = std::max(std::abs(report.derivative_expected), std::abs(pieces.zeroth));
  return report;
}

}  // namespace mevac
