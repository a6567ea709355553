#include <doctest.h>

#include <random>

#include "bellwave/spinor.hpp"

using namespace bellwave;

namespace {

bool is_hermitian(const Matrix4& m, double tol) { return max_abs_diff(m, m.adjoint()) <= tol; }

Matrix4 anticommutator(const Matrix4& a, const Matrix4& b) { return a * b + b * a; }

UnitVector3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return UnitVector3::normalized(g(rng), g(rng), g(rng));
}

}  // namespace

TEST_CASE("sigma_projection examples") {
  const Matrix4 sz = sigma_projection(UnitVector3(0.0, 0.0, 1.0));
  Matrix4 expected;
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  expected(2, 2) = 1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(sz, expected) == 0.0);

  const Matrix4 s111 = sigma_projection(UnitVector3::normalized(1.0, 1.0, 1.0));
  CHECK(max_abs_diff(s111 * s111, Matrix4::identity()) <= 1e-15);

  const Spinor4 flipped = sigma_projection(UnitVector3(1.0, 0.0, 0.0)) * leading_order_spinor(Spin::up);
  CHECK(flipped[0] == cplx(0.0));
  CHECK(flipped[1] == cplx(1.0));
  CHECK(flipped[2] == cplx(0.0));
  CHECK(flipped[3] == cplx(0.0));
}

TEST_CASE("sigma_projection is Hermitian, traceless and involutory; orthogonal ones anticommute") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const UnitVector3 n = random_unit(rng);
    // Gram-Schmidt a second random direction against n
    const Vec3 r = random_unit(rng).vec();
    const Vec3 m_raw = r - dot(r, n.vec()) * n.vec();
    const UnitVector3 m = UnitVector3::normalized(m_raw.x, m_raw.y, m_raw.z);

    const Matrix4 sn = sigma_projection(n);
    const Matrix4 sm = sigma_projection(m);
    CHECK(is_hermitian(sn, 1e-12));
    CHECK(std::abs(sn(0, 0) + sn(1, 1) + sn(2, 2) + sn(3, 3)) <= 1e-12);
    CHECK(max_abs_diff(sn * sn, Matrix4::identity()) <= 1e-12);
    CHECK(max_abs_diff(anticommutator(sn, sm), Matrix4{}) <= 1e-12);
  }
}

TEST_CASE("Dirac matrices") {
  const Matrix4 b = gamma0();
  CHECK(max_abs_diff(b * b, Matrix4::identity()) == 0.0);
  for (int i = 0; i < 3; ++i) {
    const Matrix4 ai = alpha(i);
    CHECK(is_hermitian(ai, 0.0));
    CHECK(max_abs_diff(anticommutator(ai, b), Matrix4{}) == 0.0);
    for (int j = 0; j < 3; ++j) {
      Matrix4 expected;
      if (i == j) expected = Matrix4::identity() + Matrix4::identity();
      CHECK(max_abs_diff(anticommutator(ai, alpha(j)), expected) == 0.0);
    }
  }
}

TEST_CASE("unit vectors are checked") {
  CHECK_THROWS_AS(UnitVector3(1.0, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(UnitVector3(1.0 + 1e-9, 0.0, 0.0), ValidationError);
  CHECK_NOTHROW(UnitVector3(1.0 + 1e-13, 0.0, 0.0));
  CHECK_THROWS_AS(UnitVector3::normalized(0.0, 0.0, 0.0), ValidationError);
  const UnitVector3 n = UnitVector3::normalized(3.0, 0.0, 4.0);
  CHECK(n.x() == doctest::Approx(0.6));
  CHECK(n.z() == doctest::Approx(0.8));
}

TEST_CASE("leading order spinors") {
  const Spinor4 up = leading_order_spinor(Spin::up);
  const Spinor4 down = leading_order_spinor(Spin::down);
  CHECK(up[0] == cplx(1.0));
  CHECK(up.norm2() == 1.0);
  CHECK(down[1] == cplx(1.0));
  CHECK(down.norm2() == 1.0);
  const Spinor4 image = sigma_projection(UnitVector3()) * up;
  CHECK(std::abs(inner(up, image) - 1.0) == 0.0);
}

TEST_CASE("detection spinors at the origin") {
  const PhysicalConfig cfg{1000.0, 0.001, 1000.0};
  const cplx denom(cfg.d * cfg.d, cfg.Z / cfg.P);
  const cplx pre = kSmallComponentPhase * 0.5 / denom;
  const double d2P = cfg.d * cfg.d * cfg.P;

  const Spinor4 up = detection_spinor(Spin::up, {0.0, 0.0, 0.0}, cfg);
  CHECK(up[0] == cplx(1.0));
  CHECK(up[1] == cplx(0.0));
  CHECK(std::abs(up[2] - pre * d2P) <= 1e-18);
  CHECK(up[3] == cplx(0.0));

  const Spinor4 down = detection_spinor(Spin::down, {0.0, 0.0, 0.0}, cfg);
  CHECK(down[0] == cplx(0.0));
  CHECK(down[1] == cplx(1.0));
  CHECK(down[2] == cplx(0.0));
  CHECK(std::abs(down[3] - pre * (-d2P)) <= 1e-18);
}

TEST_CASE("detection spinor transverse structure") {
  const PhysicalConfig cfg{1000.0, 0.001, 500.0};
  const cplx pre = kSmallComponentPhase * 0.5 / cplx(cfg.d * cfg.d, cfg.Z / cfg.P);
  const Spinor4 at0 = detection_spinor(Spin::up, {0.0, 0.0, 0.0}, cfg);
  for (auto [x, y] : {std::pair{300.0, -20.0}, std::pair{-1500.0, 700.0}}) {
    const Spinor4 s = detection_spinor(Spin::up, {x, y, 0.0}, cfg);
    CHECK(s[2] == at0[2]);
    CHECK(std::abs(s[3] - pre * cplx(-y, x)) <= 1e-16);
  }
  const Spinor4 lead = detection_spinor(Spin::down, {1.0, 2.0, 3.0}, cfg, SpinMode::leading);
  CHECK(lead.c == leading_order_spinor(Spin::down).c);
}

TEST_CASE("small components shrink linearly with the Compton wavelength") {
  // Lengths in units of the Compton wavelength: scaling d, r by s and P by
  // 1/s at fixed Z/P d^-2 ratio is the same as shrinking the Compton
  // wavelength by 1/s.
  const PhysicalConfig cfg{1000.0, 0.001, 700.0};
  const Vec3 r{400.0, -300.0, 700.0};
  const Spinor4 base = detection_spinor(Spin::up, r, cfg);
  for (double s : {2.0, 10.0}) {
    const PhysicalConfig scaled{cfg.d * s, cfg.P / s, cfg.Z * s};
    const Spinor4 v = detection_spinor(Spin::up, s * r, scaled);
    for (int k : {2, 3}) CHECK(std::abs(v[k] * s - base[k]) <= 1e-12 * std::abs(base[k]) + 1e-20);
  }
}
