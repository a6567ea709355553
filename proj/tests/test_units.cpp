#include <doctest.h>

#include <cmath>

#include "bellwave/units.hpp"

using namespace bellwave;

TEST_CASE("to_dimensionless reads zeta = Z/d and kappa = P d") {
  auto pt = to_dimensionless({1000.0, 0.001, 0.0});
  CHECK(pt.zeta == 0.0);
  CHECK(pt.kappa == doctest::Approx(1.0).epsilon(1e-15));

  pt = to_dimensionless({1000.0, 0.0005, 500.0});
  CHECK(pt.zeta == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pt.kappa == doctest::Approx(0.5).epsilon(1e-15));

  pt = to_dimensionless({2000.0, 0.0005, 2000.0});
  CHECK(pt.zeta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pt.kappa == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("from_dimensionless inverts the map") {
  auto cfg = from_dimensionless({1.0, 1.0}, 1000.0);
  CHECK(cfg.d == 1000.0);
  CHECK(cfg.P == doctest::Approx(0.001).epsilon(1e-15));
  CHECK(cfg.Z == doctest::Approx(1000.0).epsilon(1e-15));

  cfg = from_dimensionless({0.0, 0.5}, 1000.0);
  CHECK(cfg.P == doctest::Approx(0.0005).epsilon(1e-15));
  CHECK(cfg.Z == 0.0);

  for (double zeta : {0.0, 0.3, 1.7, 42.0}) {
    for (double kappa : {0.01, 0.5, 3.0, 90.0}) {
      for (double d : {10.0, 1000.0, 5e4}) {
        const auto back = to_dimensionless(from_dimensionless({zeta, kappa}, d, true));
        CHECK(std::abs(back.zeta - zeta) <= 1e-14 * std::max(1.0, zeta));
        CHECK(std::abs(back.kappa - kappa) <= 1e-14 * std::max(1.0, kappa));
      }
    }
  }
}

TEST_CASE("zeta depends on Z/d only and kappa on P d only") {
  const PhysicalConfig base{1000.0, 0.0008, 700.0};
  const auto ref = to_dimensionless(base);
  for (double s : {0.5, 2.0, 10.0}) {
    const auto scaled = to_dimensionless({s * base.d, base.P / s, s * base.Z});
    CHECK(scaled.zeta == doctest::Approx(ref.zeta).epsilon(1e-14));
    CHECK(scaled.kappa == doctest::Approx(ref.kappa).epsilon(1e-14));
    // changing P alone leaves zeta fixed; changing Z alone leaves kappa fixed
    CHECK(to_dimensionless({base.d, base.P * s, base.Z}).zeta == ref.zeta);
    CHECK(to_dimensionless({base.d, base.P, base.Z * s}).kappa == ref.kappa);
  }
}

TEST_CASE("relativistic momenta need the override") {
  CHECK_THROWS_AS(from_dimensionless({0.0, 200.0}, 1000.0), ValidationError);
  CHECK_NOTHROW(from_dimensionless({0.0, 200.0}, 1000.0, true));
  CHECK_THROWS_AS(validate(PhysicalConfig{1000.0, 0.1, 0.0}), ValidationError);
  CHECK_NOTHROW(validate(PhysicalConfig{1000.0, 0.0999, 0.0}));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(validate(PhysicalConfig{0.0, 0.001, 0.0}), ValidationError);
  CHECK_THROWS_AS(validate(PhysicalConfig{1000.0, -0.001, 0.0}), ValidationError);
  CHECK_THROWS_AS(validate(PhysicalConfig{1000.0, 0.001, -1.0}), ValidationError);
  CHECK_THROWS_AS(validate(DimensionlessPoint{-0.1, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(DimensionlessPoint{0.1, 0.0}), ValidationError);
  CHECK_THROWS_AS(validate(DimensionlessPoint{NAN, 1.0}), ValidationError);
  CHECK_THROWS_AS(from_dimensionless({1.0, 1.0}, -5.0), ValidationError);
}

TEST_CASE("detection time and diffusion length") {
  CHECK(detection_time({1000.0, 0.001, 1000.0}) == doctest::Approx(1e6).epsilon(1e-15));
  CHECK(detection_time({1000.0, 0.001, 0.0}) == 0.0);
  const PhysicalConfig cfg{1000.0, 0.001, 1000.0};
  CHECK(diffusion_length_sq(detection_time(cfg)) == doctest::Approx(cfg.Z / cfg.P).epsilon(1e-15));
  CHECK_THROWS_AS(detection_time({1000.0, 0.0, 10.0}), UndefinedDetectionTime);
}
