#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bellwave/wavepacket.hpp"

using namespace bellwave;

namespace {

double max_abs(const Spinor4& s) {
  double m = 0.0;
  for (const auto& c : s.c) m = std::max(m, std::abs(c));
  return m;
}

double max_diff(const Spinor4& a, const Spinor4& b) { return max_abs(a - b); }

QuadratureSpec packet_spec() {
  QuadratureSpec q;
  q.nodes_per_axis = 16;
  q.max_nodes_per_axis = 128;
  q.target_rel_tol = 1e-9;
  q.axes.assign(3, {});
  return q;
}

}  // namespace

TEST_CASE("momentum weight") {
  const MomentumSpectrum spec{{0.0, 0.0, 0.002}, 500.0};
  const double peak = std::pow(2.0 * std::numbers::pi * spec.d * spec.d, 1.5);
  CHECK(momentum_weight(spec.P0, spec) == doctest::Approx(peak).epsilon(1e-15));
  const Vec3 q{0.0011, -0.0004, 0.0007};
  CHECK(momentum_weight(spec.P0 + q, spec) == doctest::Approx(momentum_weight(spec.P0 - q, spec)).epsilon(1e-15));
  CHECK(momentum_weight(spec.P0 + q, spec) < peak);

  QuadratureSpec s;
  s.axes = {{spec.P0.x, 1.0 / spec.d}, {spec.P0.y, 1.0 / spec.d}, {spec.P0.z, 1.0 / spec.d}};
  const QuadResult total = integrate(
      [&](std::span<const double> p) { return cplx(momentum_weight({p[0], p[1], p[2]}, spec)); }, s);
  CHECK(std::abs(total.value / std::pow(2.0 * std::numbers::pi, 3.0) - 1.0) < 1e-10);
}

TEST_CASE("packet at the origin at t = 0") {
  const double d = 800.0;
  const MomentumSpectrum spec{{0.0, 0.0, 0.0}, d};
  const Spinor4 v = packet_closed({0.0, 0.0, 0.0}, 0.0, spec, Spin::up);
  CHECK(std::abs(v[0] - std::pow(d * std::sqrt(std::numbers::pi), -1.5)) <= 1e-15 * std::abs(v[0]));
  CHECK(v[1] == cplx(0.0));
  CHECK(v[2] == cplx(0.0));
  CHECK(v[3] == cplx(0.0));
}

TEST_CASE("density width at L = d") {
  const double d = 1000.0;
  const MomentumSpectrum spec{{0.0, 0.0, 0.001}, d};
  const double t = d * d;  // L^2 = t
  CHECK(density_width(t, d) == doctest::Approx(d * std::numbers::sqrt2).epsilon(1e-15));
  for (int axis = 0; axis < 3; ++axis) {
    const double rms = std::sqrt(2.0 * packet_second_moment(t, spec, axis));
    CHECK(std::abs(rms - d * std::numbers::sqrt2) / (d * std::numbers::sqrt2) < 1e-6);
  }
  CHECK(density_width(0.0, d) == doctest::Approx(d));
}

TEST_CASE("packet at the detection time carries the detection spinors") {
  const PhysicalConfig cfg = from_dimensionless({1.0, 1.0}, 1000.0);
  const double T = detection_time(cfg);
  const MomentumSpectrum forward{{0.0, 0.0, cfg.P}, cfg.d};
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, cfg.d);
  for (int k = 0; k < 10; ++k) {
    const Vec3 r{g(rng), g(rng), cfg.Z};
    const PacketEnvelope env = packet_envelope(r, T, forward);
    for (Spin s : {Spin::up, Spin::down}) {
      const Spinor4 closed = packet_closed(r, T, forward, s);
      const Spinor4 detected = env.value * detection_spinor(s, r, cfg);
      CHECK(max_diff(closed, detected) <= 1e-10 * max_abs(detected));
    }
  }
}

TEST_CASE("backward packet differs from the detection-time down spinor only in the d^2 P term") {
  const PhysicalConfig cfg = from_dimensionless({1.0, 1.0}, 1000.0);
  const double T = detection_time(cfg);
  const MomentumSpectrum backward{{0.0, 0.0, -cfg.P}, cfg.d};
  const Vec3 r{120.0, -340.0, -cfg.Z};
  const Spinor4 u = position_spinor(Spin::down, r, T, backward, SpinMode::full);
  const Spinor4 detected = detection_spinor(Spin::down, r, cfg);
  const cplx pre = kSmallComponentPhase * 0.5 / cplx(cfg.d * cfg.d, cfg.Z / cfg.P);
  CHECK(u[0] == detected[0]);
  CHECK(u[1] == detected[1]);
  CHECK(std::abs(u[2] - detected[2]) <= 1e-15 * std::abs(detected[2]));
  CHECK(std::abs((u[3] - detected[3]) - pre * 2.0 * cfg.d * cfg.d * cfg.P) <= 1e-12 * std::abs(u[3]));
}

TEST_CASE("momentum quadrature reproduces the closed form") {
  SUBCASE("free packet at rest, leading order") {
    const MomentumSpectrum spec{{0.0, 0.0, 0.0}, 1000.0};
    const PacketQuadratureOptions lead{SpinMode::leading};
    const Spinor4 num = packet_quadrature({0.0, 0.0, 0.0}, 0.0, spec, Spin::up, packet_spec(), lead);
    const Spinor4 ref = packet_closed({0.0, 0.0, 0.0}, 0.0, spec, Spin::up, SpinMode::leading);
    CHECK(max_diff(num, ref) <= 1e-8 * max_abs(ref));
  }
  SUBCASE("kappa = 1, zeta = 1 geometry at the detection time") {
    const PhysicalConfig cfg = from_dimensionless({1.0, 1.0}, 1000.0);
    const MomentumSpectrum spec{{0.0, 0.0, cfg.P}, cfg.d};
    const Vec3 r{0.5 * cfg.d, 0.0, cfg.Z};
    const double T = detection_time(cfg);
    for (Spin s : {Spin::up, Spin::down}) {
      const Spinor4 num = packet_quadrature(r, T, spec, s, packet_spec());
      const Spinor4 ref = packet_closed(r, T, spec, s);
      CHECK(max_diff(num, ref) <= 1e-6 * max_abs(ref));
    }
  }
  SUBCASE("complex envelope exponent at random points") {
    const MomentumSpectrum spec{{0.0002, -0.0001, 0.0008}, 1000.0};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_real_distribution<double> tt(0.0, 2e6);
    const PacketQuadratureOptions lead{SpinMode::leading};
    for (int k = 0; k < 5; ++k) {
      const double t = tt(rng);
      const double s = density_width(t, spec.d);
      const Vec3 r = Vec3{u(rng) * s, u(rng) * s, u(rng) * s} + t * spec.P0;
      const cplx num = packet_quadrature(r, t, spec, Spin::up, packet_spec(), lead)[0];
      const PacketEnvelope env = packet_envelope(r, t, spec);
      const cplx D = env.width_denominator;
      const cplx exponent = (-r.norm2() + 2.0 * cplx(0.0, 1.0) * spec.d * spec.d * dot(spec.P0, r)) / (2.0 * D) -
                            cplx(0.0, 1.0) * spec.d * spec.d * spec.P0.norm2() * env.L2 / (2.0 * D);
      const cplx expected = env.N * std::polar(1.0, -t) * std::exp(exponent);
      CHECK(std::abs(num - expected) <= 1e-8 * std::abs(env.N));
    }
  }
}

TEST_CASE("quadrature error falls as nodes double") {
  const PhysicalConfig cfg = from_dimensionless({1.0, 1.0}, 1000.0);
  const MomentumSpectrum spec{{0.0, 0.0, cfg.P}, cfg.d};
  const Vec3 r{0.5 * cfg.d, 0.3 * cfg.d, cfg.Z + 0.4 * cfg.d};
  const double T = detection_time(cfg);
  const Spinor4 ref = packet_closed(r, T, spec, Spin::up);
  const double e16 = max_diff(packet_quadrature_fixed(r, T, spec, Spin::up, 16), ref);
  const double e32 = max_diff(packet_quadrature_fixed(r, T, spec, Spin::up, 32), ref);
  const double e64 = max_diff(packet_quadrature_fixed(r, T, spec, Spin::up, 64), ref);
  CHECK(e32 < e16);
  CHECK(e64 <= e32);
}

TEST_CASE("relativistic dispersion is a small perturbation") {
  const PhysicalConfig cfg = from_dimensionless({0.1, 1.0}, 1000.0);
  const MomentumSpectrum spec{{0.0, 0.0, cfg.P}, cfg.d};
  const Vec3 r{0.0, 0.0, cfg.Z};
  const double T = detection_time(cfg);
  const Spinor4 quad = packet_quadrature(r, T, spec, Spin::up, packet_spec());
  const Spinor4 rel = packet_quadrature(r, T, spec, Spin::up, packet_spec(),
                                        {SpinMode::full, Dispersion::relativistic});
  const double diff = max_diff(quad, rel) / max_abs(quad);
  CHECK(diff > 0.0);
  CHECK(diff < 1e-3);
}

TEST_CASE("norm is one up to Compton-scale corrections") {
  const double kappa = 1.0;
  std::vector<double> deviation;
  for (double d : {500.0, 1000.0, 2000.0}) {
    const MomentumSpectrum spec{{0.0, 0.0, kappa / d}, d};
    const double n0 = packet_norm(0.0, spec, Spin::up);
    deviation.push_back(n0 - 1.0);
    if (d == 1000.0) {
      CHECK(std::abs(n0 - 1.0) < 1e-5);
      const double nT = packet_norm(detection_time({d, kappa / d, d}), spec, Spin::up);
      CHECK(std::abs(nT - n0) < 1e-8);
      CHECK(std::abs(packet_norm(0.0, spec, Spin::up, SpinMode::leading) - 1.0) < 1e-12);
    }
  }
  CHECK(deviation[0] > 0.0);
  CHECK(deviation[0] / deviation[1] == doctest::Approx(4.0).epsilon(0.05));
  CHECK(deviation[1] / deviation[2] == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("spectrum and time are validated") {
  CHECK_THROWS_AS(packet_envelope({}, 0.0, MomentumSpectrum{{}, 0.0}), ValidationError);
  CHECK_THROWS_AS(packet_envelope({}, -1.0, MomentumSpectrum{{}, 10.0}), ValidationError);
}
