#pragma once

// Boost of the optical constants and of the lab-frame field pair along z.

#include <cmath>
#include <string>

#include "mevac/algebra.hpp"
#include "mevac/errors.hpp"

namespace mevac {

/// Permittivity and permeability of the moving medium as seen from the lab
/// frame, valid for the components transverse to the boost axis.
template <typename Scalar>
struct TransformedConstants {
  Scalar epsilon_prime;
  Scalar mu_prime;
  Scalar beta;
};

/// Relativistic addition of the phase velocity c/n and the medium velocity,
/// expressed as an index: (n + beta) / (1 + n beta).
template <typename Scalar>
Scalar boosted_index(Scalar n, Scalar beta) {
  return (n + beta) / (Scalar(1) + n * beta);
}

/// Throws DegenerateBoost when 1 + n beta <= 0 for this material.
template <typename Scalar>
void check_boost(const Material<Scalar>& m, const BoostSpec<Scalar>& b) {
  const Scalar denom = Scalar(1) + m.index() * b.beta();
  if (!(denom > Scalar(0))) {
    throw DegenerateBoost("boost: 1 + n*beta = " + std::to_string(static_cast<double>(denom)) +
                          " <= 0 for n = " + std::to_string(static_cast<double>(m.index())));
  }
}

/// Both constants pick up the same factor (n + beta)/(1 + n beta) relative to
/// their impedance-matched values sqrt(eps/mu) and sqrt(mu/eps), so eps'/mu'
/// stays equal to eps/mu. beta == 0 returns the inputs unchanged.
template <typename Scalar>
TransformedConstants<Scalar> transform_constants(const Material<Scalar>& m, const BoostSpec<Scalar>& b) {
  using std::sqrt;
  const Scalar beta = b.beta();
  if (beta == Scalar(0)) {
    return {m.epsilon(), m.mu(), beta};
  }
  check_boost(m, b);
  const Scalar factor = boosted_index(m.index(), beta);
  return {sqrt(m.epsilon() / m.mu()) * factor, sqrt(m.mu() / m.epsilon()) * factor, beta};
}

/// Index of the moving medium, sqrt(eps' mu').
///
/// When beta < -n (only reachable for n < 1) both boosted constants are
/// negative; the returned index then carries their sign so that it still
/// equals (n + beta)/(1 + n beta).
template <typename Scalar>
Scalar index_of(const TransformedConstants<Scalar>& tc) {
  using std::copysign;
  using std::sqrt;
  return copysign(sqrt(tc.epsilon_prime * tc.mu_prime), tc.epsilon_prime);
}

enum class FieldOrder { exact, first_order };

/// Lorentz transform of (E, B) into the frame moving with the medium.
///
/// exact: E' = gamma (E + beta x B) and B' = gamma (B - beta x E) for the
/// components transverse to z; longitudinal components are unchanged.
/// first_order: the same without gamma, i.e. E' = E + beta x B, B' = B - beta x E.
template <typename Scalar>
FieldState<Scalar> transform_fields(const FieldState<Scalar>& f, const BoostSpec<Scalar>& b,
                                    FieldOrder order) {
  const Vector3<Scalar> beta = b.beta_vector();
  Vector3<Scalar> e = f.E() + beta.cross(f.B());
  Vector3<Scalar> bf = f.B() - beta.cross(f.E());
  if (order == FieldOrder::first_order) {
    return {e, bf};
  }
  const Scalar gamma = b.gamma();
  e *= gamma;
  bf *= gamma;
  e.z() = f.E().z();
  bf.z() = f.B().z();
  return {e, bf};
}

/// True when E or B has a z component larger than `ratio` times its
/// transverse magnitude. The boosted constants only describe transverse
/// components, so such inputs fall outside the model.
template <typename Scalar>
bool has_longitudinal_component(const FieldState<Scalar>& f, Scalar ratio = Scalar(1e-9)) {
  using std::abs;
  const auto exceeds = [ratio](const Vector3<Scalar>& v) {
    return abs(v.z()) > ratio * v.template head<2>().norm();
  };
  return exceeds(f.E()) || exceeds(f.B());
}

}  // namespace mevac
