#pragma once

// Small fixed-size linear algebra and the domain value types shared by every
// module. Vectors and matrices are plain Eigen types; the free functions
// accept any Eigen expression of matching shape.

#include <cmath>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "mevac/errors.hpp"

namespace mevac {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3 = Vector3<double>;
using Mat3 = Matrix3<double>;

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dot(const Eigen::MatrixBase<DerivedA>& a,
                              const Eigen::MatrixBase<DerivedB>& b) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3);
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3);
  return a.dot(b);
}

/// Right-handed cross product.
template <typename DerivedA, typename DerivedB>
Vector3<typename DerivedA::Scalar> cross(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  return a.cross(b);
}

template <typename DerivedM, typename DerivedV>
Vector3<typename DerivedV::Scalar> mat_apply(const Eigen::MatrixBase<DerivedM>& m,
                                             const Eigen::MatrixBase<DerivedV>& v) {
  return m * v;
}

/// Scalar triple product a . (b x c).
template <typename DerivedA, typename DerivedB, typename DerivedC>
typename DerivedA::Scalar triple(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b,
                                 const Eigen::MatrixBase<DerivedC>& c) {
  return a.dot(b.cross(c));
}

template <typename Derived>
typename Derived::PlainObject symmetric_part(const Eigen::MatrixBase<Derived>& m) {
  return (m + m.transpose()) / typename Derived::Scalar(2);
}

template <typename Derived>
typename Derived::PlainObject antisymmetric_part(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.transpose()) / typename Derived::Scalar(2);
}

template <typename Scalar>
Vector3<Scalar> unit_z() {
  return Vector3<Scalar>::UnitZ();
}

namespace detail {

template <typename Scalar>
bool finite(Scalar x) {
  using std::isfinite;
  return isfinite(x);
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidArgument(std::string(what) + " must have finite components");
  }
}

}  // namespace detail

/// Intrinsic optical constants of a magnetoelectric medium in its own rest
/// frame (Gaussian units) together with its mass density [g/cm^3].
///
/// chi is the dimensionless magnetoelectric susceptibility; no symmetry is
/// imposed on it.
template <typename Scalar>
class Material {
 public:
  Material(Scalar epsilon, Scalar mu, const Matrix3<Scalar>& chi, Scalar rho0)
      : epsilon_(epsilon), mu_(mu), chi_(chi), rho0_(rho0) {
    if (!detail::finite(epsilon) || !(epsilon > Scalar(0))) {
      throw InvalidArgument("material: epsilon must be finite and > 0");
    }
    if (!detail::finite(mu) || !(mu > Scalar(0))) {
      throw InvalidArgument("material: mu must be finite and > 0");
    }
    if (!detail::finite(rho0) || !(rho0 > Scalar(0))) {
      throw InvalidArgument("material: rho0 must be finite and > 0");
    }
    detail::require_finite(chi, "material: chi");
  }

  Scalar epsilon() const { return epsilon_; }
  Scalar mu() const { return mu_; }
  const Matrix3<Scalar>& chi() const { return chi_; }
  Scalar rho0() const { return rho0_; }

  /// Refractive index sqrt(epsilon mu).
  Scalar index() const {
    using std::sqrt;
    return sqrt(epsilon_ * mu_);
  }

  /// epsilon / mu, invariant under boosts along z.
  Scalar impedance_ratio() const { return epsilon_ / mu_; }

  template <typename NewScalar>
  Material<NewScalar> cast() const {
    return Material<NewScalar>(NewScalar(epsilon_), NewScalar(mu_), chi_.template cast<NewScalar>(),
                               NewScalar(rho0_));
  }

 private:
  Scalar epsilon_;
  Scalar mu_;
  Matrix3<Scalar> chi_;
  Scalar rho0_;
};

/// Boost of the medium along +z with dimensionless speed beta = v/c.
template <typename Scalar>
class BoostSpec {
 public:
  explicit BoostSpec(Scalar beta) : beta_(beta) {
    using std::abs;
    if (!detail::finite(beta) || !(abs(beta) < Scalar(1))) {
      throw InvalidArgument("boost: |beta| must be < 1");
    }
  }

  Scalar beta() const { return beta_; }

  /// beta as a vector, beta * z^.
  Vector3<Scalar> beta_vector() const { return Vector3<Scalar>(Scalar(0), Scalar(0), beta_); }

  /// Lorentz factor 1/sqrt(1 - beta^2).
  Scalar gamma() const {
    using std::sqrt;
    return Scalar(1) / sqrt(Scalar(1) - beta_ * beta_);
  }

 private:
  Scalar beta_;
};

/// Lab-frame field pair: E in statvolt/cm, B in gauss.
template <typename Scalar>
class FieldState {
 public:
  FieldState(const Vector3<Scalar>& e, const Vector3<Scalar>& b) : e_(e), b_(b) {
    detail::require_finite(e, "fields: E");
    detail::require_finite(b, "fields: B");
  }

  const Vector3<Scalar>& E() const { return e_; }
  const Vector3<Scalar>& B() const { return b_; }

  template <typename NewScalar>
  FieldState<NewScalar> cast() const {
    return FieldState<NewScalar>(e_.template cast<NewScalar>(), b_.template cast<NewScalar>());
  }

 private:
  Vector3<Scalar> e_;
  Vector3<Scalar> b_;
};

using Materiald = Material<double>;
using BoostSpecd = BoostSpec<double>;
using FieldStated = FieldState<double>;

}  // namespace mevac
