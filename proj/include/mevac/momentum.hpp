#pragma once

// Medium velocity driven by the field bilinears of a magnetoelectric medium:
//
//   rho0 v z^ = 1/(4 pi mu c) [ (eps mu - 1) E x B + E x (chi^T E) - B x (chi B) ]
//             - 1/(4 pi mu c) (n - 1/n) (B . chi^T E) z^
//
// The last line is the contribution of the boosted permeability ("mismatch term"
// below); the bracket holds the Abraham-Minkowski and magnetoelectric
// cross terms.

#include <cmath>

#include "mevac/algebra.hpp"
#include "mevac/constants.hpp"
#include "mevac/errors.hpp"
#include "mevac/lagrangian.hpp"

namespace mevac {

/// The four bilinears entering the velocity equation. For classical fields
/// they are plain products; the vacuum module fills them with mode sums.
template <typename Scalar>
struct FieldBilinears {
  Vector3<Scalar> e_cross_b = Vector3<Scalar>::Zero();
  Vector3<Scalar> e_cross_chit_e = Vector3<Scalar>::Zero();  ///< E x (chi^T E)
  Vector3<Scalar> b_cross_chi_b = Vector3<Scalar>::Zero();   ///< B x (chi B)
  Scalar b_chit_e = Scalar(0);                               ///< B . chi^T E
};

template <typename Scalar>
FieldBilinears<Scalar> field_bilinears(const Matrix3<Scalar>& chi, const FieldState<Scalar>& f) {
  const Vector3<Scalar>& e = f.E();
  const Vector3<Scalar>& b = f.B();
  const Vector3<Scalar> chit_e = chi.transpose() * e;
  return {e.cross(b), e.cross(chit_e), b.cross(chi * b), b.dot(chit_e)};
}

/// All attribution terms are momentum densities [g/(cm^2 s)]; rhs_vector
/// and v_z are divided by rho0.
template <typename Scalar>
struct VelocityResult {
  Vector3<Scalar> rhs_vector;
  Scalar v_z;
  Vector3<Scalar> abraham_minkowski_term;  ///< (eps mu - 1) E x B / (4 pi mu c)
  Vector3<Scalar> chi_E_term;              ///< E x (chi^T E) / (4 pi mu c)
  Vector3<Scalar> chi_B_term;              ///< -B x (chi B) / (4 pi mu c)
  Scalar index_mismatch_term_z;                      ///< -(n - 1/n) B . chi^T E / (4 pi mu c)
  Scalar transverse_residual;              ///< |(rhs_x, rhs_y)|

  /// z-projection of the three bracketed terms, before the division by rho0.
  Scalar cross_terms_z() const { return abraham_minkowski_term.z() + chi_E_term.z() + chi_B_term.z(); }
};

template <typename Scalar>
VelocityResult<Scalar> medium_velocity(const Material<Scalar>& m, const FieldBilinears<Scalar>& bl) {
  const Scalar prefactor =
      Scalar(1) / (Scalar(4) * Scalar(constants::pi) * m.mu() * Scalar(constants::c));
  VelocityResult<Scalar> r;
  r.abraham_minkowski_term = prefactor * (m.epsilon() * m.mu() - Scalar(1)) * bl.e_cross_b;
  r.chi_E_term = prefactor * bl.e_cross_chit_e;
  r.chi_B_term = -prefactor * bl.b_cross_chi_b;
  r.index_mismatch_term_z = -prefactor * index_mismatch(m) * bl.b_chit_e;
  r.rhs_vector = (r.abraham_minkowski_term + r.chi_E_term + r.chi_B_term) / m.rho0() +
                 r.index_mismatch_term_z * unit_z<Scalar>() / m.rho0();
  r.v_z = r.rhs_vector.z();
  r.transverse_residual = r.rhs_vector.template head<2>().norm();
  return r;
}

template <typename Scalar>
VelocityResult<Scalar> medium_velocity(const Material<Scalar>& m, const FieldState<Scalar>& f) {
  return medium_velocity(m, field_bilinears(m.chi(), f));
}

/// |index_mismatch_term_z| / |z-projection of the bracketed terms|. Throws
/// DivisionDegenerate when the denominator is below 1e-300.
template <typename Scalar>
Scalar term_ratio(const VelocityResult<Scalar>& r) {
  using std::abs;
  const Scalar denom = abs(r.cross_terms_z());
  if (!(denom >= Scalar(1e-300))) {
    throw DivisionDegenerate("term_ratio: bracketed z-terms vanish; only the boosted-mu term contributes");
  }
  return abs(r.index_mismatch_term_z) / denom;
}

template <typename Scalar>
Scalar term_ratio(const Material<Scalar>& m, const FieldState<Scalar>& f) {
  return term_ratio(medium_velocity(m, f));
}

/// Central-difference gradient of interaction_density with respect to the
/// medium velocity at v = 0, divided by 4 pi. Step is c * beta_probe along
/// each axis.
Vec3 interaction_velocity_gradient(const Materiald& m, const FieldStated& f, double beta_probe);

/// Compares the velocity gradient of the chi-dependent interaction density
/// with the chi-dependent part of rho0 * rhs_vector. The equation of motion
/// reads rho0 v = -dL/dv, so the returned value is
/// |gradient/(4 pi) + (chi_E_term + chi_B_term + index_mismatch_term_z z^)|.
/// The (eps mu - 1) E x B term is not generated by these pieces and is left
/// out. Requires 0 < beta_probe <= 1e-3 (DegenerateProbe otherwise).
double lagrangian_consistency_check(const Materiald& m, const FieldStated& f, double beta_probe);

/// chi_E_term + chi_B_term + index_mismatch_term_z z^
template <typename Scalar>
Vector3<Scalar> chi_dependent_part(const VelocityResult<Scalar>& r) {
  return r.chi_E_term + r.chi_B_term + r.index_mismatch_term_z * unit_z<Scalar>();
}

}  // namespace mevac
