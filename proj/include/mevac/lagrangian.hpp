#pragma once

// Magnetoelectric interaction Lagrangian density of a medium moving along z.
//
// Three evaluations are provided:
//   * an exact reference model (1/mu'(beta)) B'.chi^T E' built from the boosted
//     constants and the exact Lorentz field transform,
//   * its first-order expansion split into named pieces,
//   * the vector (triple-product) form of the velocity-dependent pieces.
// Densities exclude the 1/(4 pi) volume measure; that factor is applied by
// the momentum module.

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "mevac/algebra.hpp"
#include "mevac/constants.hpp"
#include "mevac/relativity.hpp"

namespace mevac {

/// sqrt(eps mu) - 1/sqrt(eps mu). Snapped to exactly zero for |eps mu - 1| <= 1e-14.
template <typename Scalar>
Scalar index_mismatch(const Material<Scalar>& m) {
  using std::abs;
  const Scalar product = m.epsilon() * m.mu();
  if (abs(product - Scalar(1)) <= Scalar(1e-14)) {
    return Scalar(0);
  }
  const Scalar n = m.index();
  return n - Scalar(1) / n;
}

/// B . chi^T E
template <typename Scalar>
Scalar me_coupling(const Matrix3<Scalar>& chi, const Vector3<Scalar>& e, const Vector3<Scalar>& b) {
  return b.dot(chi.transpose() * e);
}

/// Rest-frame term (1/mu) B . chi^T E.
template <typename Scalar>
Scalar me_density_rest(const Material<Scalar>& m, const FieldState<Scalar>& f) {
  return me_coupling(m.chi(), f.E(), f.B()) / m.mu();
}

/// Reference model (1/mu'(beta)) B'(beta) . chi^T E'(beta), exact in beta.
/// chi itself is not transformed.
template <typename Scalar>
Scalar me_density_exact(const Material<Scalar>& m, const FieldState<Scalar>& f, const BoostSpec<Scalar>& b) {
  const auto tc = transform_constants(m, b);
  const auto moved = transform_fields(f, b, FieldOrder::exact);
  return me_coupling(m.chi(), moved.E(), moved.B()) / tc.mu_prime;
}

template <typename Scalar>
struct LagrangianBreakdown {
  Scalar zeroth;         ///< (1/mu) B . chi^T E
  Scalar mixing_b;       ///< (1/mu c) B . chi^T (v x B), quadratic in B
  Scalar mixing_e;       ///< (1/mu c) (E x v) . chi^T E, quadratic in E
  Scalar mixing;         ///< mixing_b + mixing_e
  Scalar mu_correction;  ///< (1/mu c) v (n - 1/n) B . chi^T E
  Scalar total_first_order;
};

/// First-order expansion of the reference model in v = c beta z^.
template <typename Scalar>
LagrangianBreakdown<Scalar> me_density_first_order(const Material<Scalar>& m, const FieldState<Scalar>& f,
                                                   const BoostSpec<Scalar>& b) {
  const Scalar c = Scalar(constants::c);
  const Vector3<Scalar> v = c * b.beta_vector();
  const Matrix3<Scalar> chi_t = m.chi().transpose();
  const Vector3<Scalar>& e = f.E();
  const Vector3<Scalar>& bf = f.B();
  const Scalar inv_mu_c = Scalar(1) / (m.mu() * c);

  LagrangianBreakdown<Scalar> out;
  const Scalar coupling = me_coupling(m.chi(), e, bf);
  out.zeroth = coupling / m.mu();
  out.mixing_b = inv_mu_c * bf.dot(chi_t * v.cross(bf));
  out.mixing_e = inv_mu_c * e.cross(v).dot(chi_t * e);
  out.mixing = out.mixing_b + out.mixing_e;
  out.mu_correction = inv_mu_c * v.z() * index_mismatch(m) * coupling;
  out.total_first_order = out.zeroth + out.mixing + out.mu_correction;
  return out;
}

/// Velocity-dependent interaction density for an arbitrary medium velocity
/// `v` [cm/s]:
///   (1/mu c) v . {B x (chi B) - E x (chi^T E)} + (1/mu c) (v . z^)(n - 1/n) B . chi^T E
template <typename Scalar>
Scalar interaction_density(const Material<Scalar>& m, const FieldState<Scalar>& f, const Vector3<Scalar>& v) {
  const Scalar c = Scalar(constants::c);
  const Vector3<Scalar>& e = f.E();
  const Vector3<Scalar>& b = f.B();
  const Scalar inv_mu_c = Scalar(1) / (m.mu() * c);
  const Vector3<Scalar> bracket = b.cross(m.chi() * b) - e.cross(m.chi().transpose() * e);
  return inv_mu_c * v.dot(bracket) +
         inv_mu_c * v.z() * index_mismatch(m) * me_coupling(m.chi(), e, b);
}

/// Triple-product form of mixing + mu_correction, for v = c beta z^.
template <typename Scalar>
Scalar vector_form_density(const Material<Scalar>& m, const FieldState<Scalar>& f, const BoostSpec<Scalar>& b) {
  return interaction_density(m, f, Vector3<Scalar>(Scalar(constants::c) * b.beta_vector()));
}

/// [1/mu'(beta) - 1/mu] B . chi^T E with untransformed fields: the part of
/// the reference model carried by the boost of mu alone.
template <typename Scalar>
Scalar isolate_mu_term(const Material<Scalar>& m, const FieldState<Scalar>& f, const BoostSpec<Scalar>& b) {
  const auto tc = transform_constants(m, b);
  return (Scalar(1) / tc.mu_prime - Scalar(1) / m.mu()) * me_coupling(m.chi(), f.E(), f.B());
}

/// Outcome of comparing the reference model with its first-order expansion
/// on a grid of beta values.
struct ExpansionReport {
  std::vector<double> betas;
  std::vector<double> exact;
  std::vector<double> first_order;
  std::vector<double> residuals;

  /// Least-squares slope of log(residual) against log(beta); empty when any
  /// residual is zero.
  std::optional<double> slope;
  bool identically_zero = false;

  /// Central difference of the reference model at beta = 0 (step 1e-6).
  double derivative_fd = 0.0;
  /// (mixing + mu_correction) / beta at the first grid point.
  double derivative_expected = 0.0;
  double derivative_delta = 0.0;
  /// max(|derivative_expected|, |zeroth|)
  double derivative_scale = 0.0;

  static constexpr double kSlopeLow = 1.9;
  static constexpr double kSlopeHigh = 2.1;
  static constexpr double kDerivativeTolerance = 1e-8;
  static constexpr double kDerivativeStep = 1e-6;

  double derivative_relative() const;
  bool slope_ok() const;
  bool derivative_ok() const;
  bool passed() const;
};

/// Default grid {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}.
std::vector<double> default_beta_grid();

/// Requires at least three strictly increasing betas in (0, 0.1]; throws
/// DegenerateGrid otherwise.
ExpansionReport verify_expansion(const Materiald& m, const FieldStated& f, std::span<const double> beta_grid);

}  // namespace mevac
