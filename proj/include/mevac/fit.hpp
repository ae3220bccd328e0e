#pragma once

#include <optional>
#include <span>

namespace mevac {

/// Least-squares slope of log(y) against log(x). Empty if fewer than two
/// points, if any value is non-positive, or if all x coincide.
std::optional<double> log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace mevac
