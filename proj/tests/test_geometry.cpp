#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/geometry.hpp"

using namespace casimir;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SystemConfig random_physical(std::mt19937_64& rng) {
  const auto iso = PolarizabilityTensor::isotropic(1.0);
  return {AtomSpec{{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, 0.05, 5)}, iso},
          AtomSpec{{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, 0.05, 5)}, iso}};
}

}  // namespace

TEST_CASE("image_point mirrors through z = 0") {
  CHECK(image_point({0, 0, 1}) == Vector3{0, 0, -1});
  CHECK(image_point({1, 0, 0}) == Vector3{1, 0, 0});
  CHECK(image_point({0.3, -0.4, 2.5}) == Vector3{0.3, -0.4, -2.5});
}

TEST_CASE("image_point is an involution") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Vector3 p{uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10)};
    CHECK(image_point(image_point(p)) == p);
  }
}

TEST_CASE("reflect_tensor negates the z row") {
  CHECK(reflect_tensor(PolarizabilityTensor::isotropic(1.0)).matrix() == Matrix3::diagonal(1, 1, -1));
  CHECK(reflect_tensor(PolarizabilityTensor::uniaxial(2.0, 5.0)).matrix() == Matrix3::diagonal(2, 2, -5));

  const double c = 0.37;
  const PolarizabilityTensor alpha(Matrix3(1, 0, c, 0, 1, 0, c, 0, 1));
  const Matrix3 beta = reflect_tensor(alpha).matrix();
  CHECK(beta(2, 0) == -c);
  CHECK(beta(0, 2) == c);
  CHECK(beta(2, 2) == -1.0);
}

TEST_CASE("reflecting twice restores the tensor") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    Matrix3 m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) m(i, j) = m(j, i) = uniform(rng, -1, 1);
    const Matrix3 beta = reflect_tensor(PolarizabilityTensor(m)).matrix();
    CHECK(Matrix3::diagonal(1, 1, -1) * beta == m);
  }
}

TEST_CASE("polarizability validation") {
  CHECK_THROWS_AS(PolarizabilityTensor(Matrix3(1, 0.5, 0, 0, 1, 0, 0, 0, 1)), ValidationError);
  CHECK_THROWS_AS(PolarizabilityTensor(Matrix3::diagonal(1, NAN, 1)), ValidationError);
  // asymmetry at the 1e-13 relative level is tolerated
  CHECK_NOTHROW(PolarizabilityTensor(Matrix3(1, 0.5, 0, 0.5 + 1e-13, 1, 0, 0, 0, 1)));

  CHECK(PolarizabilityTensor::isotropic(2.0).is_positive_semidefinite());
  CHECK(PolarizabilityTensor::uniaxial(0.0, 1.0).is_positive_semidefinite());
  CHECK_FALSE(PolarizabilityTensor::uniaxial(1.0, -0.5).is_positive_semidefinite());
  CHECK_FALSE(PolarizabilityTensor(Matrix3(1, 2, 0, 2, 1, 0, 0, 0, 1)).is_positive_semidefinite());
}

TEST_CASE("derive_geometry examples") {
  const auto iso = PolarizabilityTensor::isotropic(1.0);

  SUBCASE("equal heights, Z = a") {
    const auto g = derive_geometry({AtomSpec{{0, 0, 1}, iso}, AtomSpec{{1, 0, 1}, iso}});
    CHECK(g.a == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.delta_z == 0.0);
    CHECK(g.r == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.R == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    REQUIRE(g.gamma.has_value());
    CHECK(*g.gamma == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(g.Gamma == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  }

  SUBCASE("one atom on the plate") {
    const auto g = derive_geometry({AtomSpec{{0, 0, 1}, iso}, AtomSpec{{1, 0, 0}, iso, true}});
    CHECK(g.r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(g.R == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(g.Gamma == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(g.gamma.has_value());
  }

  SUBCASE("a / r = 0.75 gives dZ / a = 0.8819") {
    const auto cfg = make_unequal_config(0.75, 1.0, 2.0, iso, iso);
    const auto g = derive_geometry(cfg);
    CHECK(g.r == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g.a == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(g.Gamma == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g.delta_z / g.a == doctest::Approx(0.8819).epsilon(1e-4));
  }
}

TEST_CASE("derive_geometry errors") {
  const auto iso = PolarizabilityTensor::isotropic(1.0);
  CHECK_THROWS_AS(derive_geometry({AtomSpec{{1, 2, 3}, iso}, AtomSpec{{1, 2, 3}, iso}}), GeometryError);
  CHECK_THROWS_AS(derive_geometry({AtomSpec{{0, 0, -1}, iso}, AtomSpec{{1, 0, 1}, iso}}), GeometryError);
  CHECK_THROWS_AS(derive_geometry({AtomSpec{{0, 0, 1}, iso}, AtomSpec{{1, 0, 0}, iso}}), GeometryError);
  CHECK_THROWS_AS(derive_geometry({AtomSpec{{0, 0, 0}, iso, true}, AtomSpec{{0, 0, 0}, iso, true}}),
                  GeometryError);
  CHECK_THROWS_AS(derive_geometry({AtomSpec{{0, NAN, 1}, iso}, AtomSpec{{1, 0, 1}, iso}}), GeometryError);
}

TEST_CASE("relative-position closure identities hold for random configs") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 500; ++k) {
    const auto g = derive_geometry(random_physical(rng));
    // r21 + r1-image2 + image2-image1 + image1-2 = 0
    const Vector3 rbar21 = image_point(g.r21);  // image(r2) - image(r1)
    const Vector3 rbar1_2 = -g.r2_image1;       // image(r1) - r2
    const Vector3 sum = g.r21 + g.r1_image2 + rbar21 + rbar1_2;
    CHECK(norm(sum) <= 1e-12 * g.r);
    CHECK(std::fabs(dot(g.r21 + g.r1_image2, g.r1_image2 + rbar1_2)) <= 1e-12 * g.r * g.r);

    CHECK(g.r * g.r == doctest::Approx(g.a * g.a + g.delta_z * g.delta_z).epsilon(1e-12));
    CHECK(g.Gamma >= 1.0);
    CHECK(norm(g.r1_image2) == doctest::Approx(g.R).epsilon(1e-14));
  }
}

TEST_CASE("Gamma is exactly 1 with an atom on the plate") {
  std::mt19937_64 rng(5);
  const auto iso = PolarizabilityTensor::isotropic(1.0);
  for (int k = 0; k < 100; ++k) {
    const AtomSpec up{{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, 0.1, 4)}, iso};
    const AtomSpec down{{uniform(rng, -2, 2), uniform(rng, -2, 2), 0.0}, iso, true};
    CHECK(std::fabs(derive_geometry({up, down}).Gamma - 1.0) <= 1e-12);
    CHECK(std::fabs(derive_geometry({down, up}).Gamma - 1.0) <= 1e-12);
  }
}

TEST_CASE("gamma matches sqrt(1 + 4 Z^2 / a^2) at equal heights") {
  std::mt19937_64 rng(9);
  const auto iso = PolarizabilityTensor::isotropic(1.0);
  for (int k = 0; k < 200; ++k) {
    const double a = uniform(rng, 0.05, 5);
    const double Z = uniform(rng, 0.0, 5);
    const auto g = derive_geometry(make_equidistant_config(a, Z, iso, iso));
    REQUIRE(g.gamma.has_value());
    CHECK(*g.gamma == doctest::Approx(equidistant_gamma(a, Z)).epsilon(1e-12));
  }
}

TEST_CASE("make_unequal_config reproduces its inputs") {
  const auto iso = PolarizabilityTensor::isotropic(1.0);
  for (double Gamma : {1.0, 1.0 + 1e-6, 1.3, 2.5, 4.0}) {
    const auto cfg = make_unequal_config(0.5, 1.7, Gamma, iso, iso);
    const auto g = derive_geometry(cfg);
    CHECK(g.r == doctest::Approx(1.7).epsilon(1e-13));
    CHECK(g.a == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(g.Gamma == doctest::Approx(Gamma).epsilon(1e-12));
    CHECK(cfg.atom2.contact == (Gamma == 1.0));
  }
  CHECK_THROWS_AS(make_unequal_config(2.0, 1.0, 2.0, iso, iso), GeometryError);
  CHECK_THROWS_AS(make_unequal_config(0.5, 1.0, 0.9, iso, iso), GeometryError);
}
