#include "mevac/momentum.hpp"

#include <string>

namespace mevac {

Vec3 interaction_velocity_gradient(const Materiald& m, const FieldStated& f, double beta_probe) {
  if (!(beta_probe > 0.0) || !(beta_probe <= 1e-3)) {
    throw DegenerateProbe("beta_probe must lie in (0, 1e-3], got " + std::to_string(beta_probe));
  }
  const double h = constants::c * beta_probe;
  Vec3 gradient;
  for (int axis = 0; axis < 3; ++axis) {
    const Vec3 step = h * Vec3::Unit(axis);
    gradient[axis] = (interaction_density(m, f, step) - interaction_density(m, f, Vec3(-step))) / (2.0 * h);
  }
  return gradient / (4.0 * constants::pi);
}

double lagrangian_consistency_check(const Materiald& m, const FieldStated& f, double beta_probe) {
  const Vec3 gradient = interaction_velocity_gradient(m, f, beta_probe);
  const Vec3 expected = chi_dependent_part(medium_velocity(m, f));
  return (gradient + expected).norm();
}

}  // namespace mevac
