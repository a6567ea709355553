#include <doctest.h>

#include <cmath>
#include <random>

#include "bellwave/correlator.hpp"
#include "bellwave/entangled.hpp"

using namespace bellwave;

namespace {

double max_abs_diff(const TwoParticleAmplitude& a, const TwoParticleAmplitude& b) {
  return (a + cplx(-1.0) * b).max_abs();
}

// Singlet spin structure at leading order: only (up, down) and (down, up)
// entries, equal and opposite.
void check_singlet_structure(const TwoParticleAmplitude& a) {
  const double scale = a.max_abs();
  REQUIRE(scale > 0.0);
  CHECK(std::abs(a(0, 1) + a(1, 0)) <= 1e-14 * scale);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!((i == 0 && j == 1) || (i == 1 && j == 0))) CHECK(std::abs(a(i, j)) <= 1e-14 * scale);
}

}  // namespace

TEST_CASE("coincident detectors give the bare singlet") {
  const PhysicalConfig cfg{1000.0, 0.001, 0.0};
  CHECK(relative_phase_exponent(cfg) == cplx(0.0));
  check_singlet_structure(singlet_at_detection(0.0, 0.0, 0.0, 0.0, cfg));
}

TEST_CASE("singlet_general at t = 0 and the origin") {
  const PhysicalConfig cfg = from_dimensionless({1.0, 1.0}, 1000.0);
  check_singlet_structure(singlet_general({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 0.0, cfg));
}

TEST_CASE("full exchange negates the amplitude") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> zk(0.05, 2.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const PhysicalConfig cfg = from_dimensionless({zk(rng), zk(rng)}, 1000.0);
    const double T = detection_time(cfg);
    const Vec3 r1{u(rng) * cfg.d, u(rng) * cfg.d, cfg.Z + u(rng) * cfg.d};
    const Vec3 r2{u(rng) * cfg.d, u(rng) * cfg.d, -cfg.Z + u(rng) * cfg.d};
    for (SpinMode mode : {SpinMode::leading, SpinMode::full}) {
      const auto a = singlet_general(r1, r2, T, cfg, mode);
      const auto b = singlet_general(r2, r1, T, cfg, mode).swapped_indices();
      worst = std::max(worst, (a + b).max_abs() / a.max_abs());
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("joint envelope modulus") {
  const PhysicalConfig cfg = from_dimensionless({0.7, 1.3}, 1000.0);
  const double k = cfg.d * cfg.d / (std::pow(cfg.d, 4) + std::pow(cfg.Z / cfg.P, 2));
  const double e0 = std::norm(joint_envelope(0.0, 0.0, 0.0, 0.0, cfg));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, cfg.d);
  for (int i = 0; i < 5; ++i) {
    const double x1 = g(rng), y1 = g(rng), x2 = g(rng), y2 = g(rng);
    const double ratio = std::norm(joint_envelope(x1, y1, x2, y2, cfg)) / e0;
    const double expected = std::exp(-(x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2) * k);
    CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("relative phase exponent in dimensionless form") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (int i = 0; i < 20; ++i) {
    const DimensionlessPoint pt{u(rng), u(rng)};
    const double z = pt.zeta, k = pt.kappa;
    const cplx expected(-4.0 * k * k * z * z / (k * k + z * z), -4.0 * k * k * k * z / (k * k + z * z));
    for (double d : {500.0, 1000.0, 4000.0}) {
      const cplx e = relative_phase_exponent(from_dimensionless(pt, d));
      CHECK(std::abs(e - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("closed detection-plane form agrees with the two-packet construction") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto [zeta, kappa] : {std::pair{1.0, 1.0}, std::pair{0.4, 0.5}, std::pair{2.0, 1.7}}) {
    const PhysicalConfig cfg = from_dimensionless({zeta, kappa}, 1000.0);
    const double T = detection_time(cfg);
    const double w = transverse_width(cfg);
    auto general = [&](double x1, double y1, double x2, double y2) {
      return singlet_general({x1, y1, cfg.Z}, {x2, y2, -cfg.Z}, T, cfg);
    };
    // The two forms differ by one complex constant; fix it at the origin.
    const auto ref_a = singlet_at_detection(0.0, 0.0, 0.0, 0.0, cfg);
    const auto ref_b = general(0.0, 0.0, 0.0, 0.0);
    const cplx c = ref_a(0, 1) / ref_b(0, 1);
    for (int i = 0; i < 10; ++i) {
      const double x1 = w * g(rng), y1 = w * g(rng), x2 = w * g(rng), y2 = w * g(rng);
      const auto a = singlet_at_detection(x1, y1, x2, y2, cfg);
      const auto b = c * general(x1, y1, x2, y2);
      CHECK(max_abs_diff(a, b) <= 1e-10 * a.max_abs());
    }
  }
}

TEST_CASE("window weights") {
  const DetectorWindow uniform;
  CHECK(window_weight(uniform, 1e9, -3.0) == 1.0);
  const DetectorWindow gauss{WindowProfile::gaussian, 250.0};
  CHECK(window_weight(gauss, 0.0, 0.0) == 1.0);
  CHECK(window_weight(gauss, 250.0, 0.0) == doctest::Approx(std::exp(-0.5)));
  CHECK_THROWS_AS((DetectorWindow{WindowProfile::gaussian, 0.0}.validate()), ValidationError);
}

TEST_CASE("a broad gaussian window barely moves the correlator") {
  const PhysicalConfig cfg = from_dimensionless({1.0, 1.0}, 1000.0);
  const UnitVector3 x(1.0, 0.0, 0.0);
  const CorrelatorValue flat = correlator_numeric(x, x, cfg);
  NumericOptions opts;
  opts.window_a = opts.window_b = DetectorWindow{WindowProfile::gaussian, 10.0 * cfg.d};
  const CorrelatorValue apodized = correlator_numeric(x, x, cfg, opts);
  CHECK(std::abs(apodized.value - flat.value) / std::abs(flat.value) < 1e-3);
  CHECK(apodized.value != flat.value);
}
