#include <doctest.h>

#include "mevac/relativity.hpp"
#include "test_support.hpp"

using namespace mevac;
using testing::rel_diff;

namespace {

Materiald plain(double eps, double mu) { return Materiald(eps, mu, Mat3::Zero(), 1.0); }

}  // namespace

TEST_CASE("transform_constants: zero boost returns the inputs bit for bit") {
  const auto tc = transform_constants(plain(2.25, 1.0), BoostSpecd(0.0));
  CHECK(tc.epsilon_prime == 2.25);
  CHECK(tc.mu_prime == 1.0);

  testing::Sampler s(3);
  for (int i = 0; i < 100; ++i) {
    const Materiald m = plain(s.uniform(0.1, 10), s.uniform(0.1, 10));
    const auto t = transform_constants(m, BoostSpecd(0.0));
    CHECK(t.epsilon_prime == m.epsilon());
    CHECK(t.mu_prime == m.mu());
  }
}

TEST_CASE("transform_constants: unit index is a fixed point") {
  const auto tc = transform_constants(plain(2.0, 0.5), BoostSpecd(0.3));
  CHECK(tc.epsilon_prime == 2.0);
  CHECK(tc.mu_prime == 0.5);
}

TEST_CASE("transform_constants: high-precision reference values") {
  // mpmath, 50 digits: tests/oracles/closed_form_oracle.py
  const auto tc = transform_constants(plain(2.25, 1.0), BoostSpecd(0.1));
  CHECK(rel_diff(tc.epsilon_prime, 2.086956521739130434782609) <= 1e-15);
  CHECK(rel_diff(tc.mu_prime, 0.9275362318840579710144928) <= 1e-15);
}

TEST_CASE("transform_constants: degenerate denominator") {
  CHECK_THROWS_AS(transform_constants(plain(4.0, 1.0), BoostSpecd(-0.5)), DegenerateBoost);
  CHECK_THROWS_AS(transform_constants(plain(4.0, 1.0), BoostSpecd(-0.7)), DegenerateBoost);
  CHECK_NOTHROW(transform_constants(plain(4.0, 1.0), BoostSpecd(-0.49)));
}

TEST_CASE("index_of") {
  CHECK(index_of(transform_constants(plain(2.25, 1.0), BoostSpecd(0.0))) == 1.5);
  CHECK(index_of(transform_constants(plain(2.0, 0.5), BoostSpecd(0.7))) == 1.0);
  CHECK(rel_diff(index_of(transform_constants(plain(2.25, 1.0), BoostSpecd(0.1))), 1.391304347826086956521739) <=
        1e-15);

  // beta < -n flips the sign of both constants; the index follows (n+beta)/(1+n beta).
  const auto tc = transform_constants(plain(0.25, 1.0), BoostSpecd(-0.7));
  CHECK(tc.epsilon_prime < 0.0);
  CHECK(rel_diff(index_of(tc), boosted_index(0.5, -0.7)) <= 1e-15);
}

TEST_CASE("impedance invariance and index velocity addition") {
  testing::Sampler s(101);
  int accepted = 0;
  while (accepted < 1000) {
    const Materiald m = plain(s.uniform(0.1, 10), s.uniform(0.1, 10));
    const double beta = s.uniform(-0.5, 0.5);
    if (!(1.0 + m.index() * beta > 0.0)) {
      continue;
    }
    ++accepted;
    const auto tc = transform_constants(m, BoostSpecd(beta));
    CHECK(std::abs(tc.epsilon_prime / tc.mu_prime - m.impedance_ratio()) <= 1e-12 * m.impedance_ratio());
    CHECK(rel_diff(index_of(tc), boosted_index(m.index(), beta)) <= 1e-12);
  }
}

TEST_CASE("successive boosts compose by velocity addition") {
  testing::Sampler s(202);
  int accepted = 0;
  while (accepted < 500) {
    const Materiald m = plain(s.uniform(0.1, 10), s.uniform(0.1, 10));
    const double b1 = s.uniform(-0.5, 0.5);
    const double b2 = s.uniform(-0.5, 0.5);
    const double n = m.index();
    if (!(1.0 + n * b1 > 0.0) || !(n + b1 > 0.0)) {
      continue;
    }
    const auto first = transform_constants(m, BoostSpecd(b1));
    const Materiald moved = plain(first.epsilon_prime, first.mu_prime);
    if (!(1.0 + moved.index() * b2 > 0.0)) {
      continue;
    }
    ++accepted;
    const auto second = transform_constants(moved, BoostSpecd(b2));
    const double combined = (b1 + b2) / (1.0 + b1 * b2);
    const auto direct = transform_constants(m, BoostSpecd(combined));
    CHECK(rel_diff(index_of(second), index_of(direct)) <= 1e-10);
    CHECK(rel_diff(second.epsilon_prime, direct.epsilon_prime) <= 1e-10);
    CHECK(rel_diff(second.mu_prime, direct.mu_prime) <= 1e-10);
  }
}

TEST_CASE("transform_fields examples") {
  testing::Sampler s(7);
  const FieldStated f(s.vec(), s.vec());
  for (const auto order : {FieldOrder::exact, FieldOrder::first_order}) {
    const auto same = transform_fields(f, BoostSpecd(0.0), order);
    CHECK(same.E() == f.E());
    CHECK(same.B() == f.B());
  }

  const FieldStated crossed(Vec3::Zero(), Vec3::UnitY());
  const auto moved = transform_fields(crossed, BoostSpecd(0.01), FieldOrder::first_order);
  CHECK((moved.E() - Vec3(-0.01, 0, 0)).norm() <= 1e-17);
  CHECK(moved.B() == Vec3::UnitY());

  const FieldStated unit(Vec3(1, 0, 0), Vec3(0, 1, 0));
  const auto exact = transform_fields(unit, BoostSpecd(1e-6), FieldOrder::exact);
  const auto first = transform_fields(unit, BoostSpecd(1e-6), FieldOrder::first_order);
  CHECK((exact.E() - first.E()).cwiseAbs().maxCoeff() <= 1e-11);
  CHECK((exact.B() - first.B()).cwiseAbs().maxCoeff() <= 1e-11);
}

TEST_CASE("exact field transform is inverted by the opposite boost") {
  testing::Sampler s(8);
  for (int i = 0; i < 1000; ++i) {
    const FieldStated f(s.vec(), s.vec());
    const double beta = s.uniform(-0.5, 0.5);
    const auto there = transform_fields(f, BoostSpecd(beta), FieldOrder::exact);
    const auto back = transform_fields(there, BoostSpecd(-beta), FieldOrder::exact);
    CHECK((back.E() - f.E()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((back.B() - f.B()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("exact transform leaves longitudinal components alone") {
  const FieldStated f(Vec3(0.2, -0.4, 0.9), Vec3(-0.1, 0.3, -0.6));
  const auto moved = transform_fields(f, BoostSpecd(0.4), FieldOrder::exact);
  CHECK(moved.E().z() == 0.9);
  CHECK(moved.B().z() == -0.6);
}

TEST_CASE("longitudinal detection") {
  CHECK_FALSE(has_longitudinal_component(FieldStated(Vec3(1, 0, 0), Vec3(0, 1, 0))));
  CHECK_FALSE(has_longitudinal_component(FieldStated(Vec3(1, 0, 1e-10), Vec3(0, 1, 0))));
  CHECK(has_longitudinal_component(FieldStated(Vec3(1, 0, 1e-8), Vec3(0, 1, 0))));
  CHECK(has_longitudinal_component(FieldStated(Vec3(0, 0, 0), Vec3(0, 0, 1))));
  CHECK_FALSE(has_longitudinal_component(FieldStated(Vec3::Zero(), Vec3::Zero())));
}

TEST_CASE("long double instantiation agrees with double") {
  const Material<long double> m(2.25L, 1.0L, Matrix3<long double>::Zero(), 1.0L);
  const auto tc = transform_constants(m, BoostSpec<long double>(0.1L));
  CHECK(rel_diff(static_cast<double>(tc.epsilon_prime), 2.086956521739130434782609) <= 1e-16);
  CHECK(rel_diff(static_cast<double>(index_of(tc)), 1.391304347826086956521739) <= 1e-16);
}
