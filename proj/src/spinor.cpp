#include "bellwave/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bellwave {

UnitVector3::UnitVector3(double x, double y, double z) : v_{x, y, z} {
  const double n2 = v_.norm2();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolerance) {
    std::ostringstream msg;
    msg << "analyzer direction (" << x << ", " << y << ", " << z << ") is not a unit vector";
    throw ValidationError(msg.str());
  }
}

UnitVector3 UnitVector3::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("cannot normalize a zero or non-finite vector");
  return UnitVector3(Vec3{x / n, y / n, z / n}, Trusted{});
}

double Spinor4::norm2() const {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return s;
}

cplx inner(const Spinor4& a, const Spinor4& b) {
  cplx s{};
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Matrix4 Matrix4::identity() {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i][i] = 1.0;
  return out;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out.m[r][c] = std::conj(m[c][r]);
  return out;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx ark = a.m[r][k];
      if (ark == cplx{}) continue;
      for (std::size_t c = 0; c < 4; ++c) out.m[r][c] += ark * b.m[k][c];
    }
  return out;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out.m[r][c] = a.m[r][c] + b.m[r][c];
  return out;
}

Spinor4 operator*(const Matrix4& a, const Spinor4& v) {
  Spinor4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += a.m[r][c] * v[c];
  return out;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) worst = std::max(worst, std::abs(a.m[r][c] - b.m[r][c]));
  return worst;
}

namespace {

using Pauli = std::array<std::array<cplx, 2>, 2>;

Pauli pauli(int axis) {
  constexpr cplx i{0.0, 1.0};
  Pauli p{};
  switch (axis) {
    case 0:
      p[0][1] = p[1][0] = 1.0;
      break;
    case 1:
      p[0][1] = -i;
      p[1][0] = i;
      break;
    case 2:
      p[0][0] = 1.0;
      p[1][1] = -1.0;
      break;
    default:
      throw ValidationError("Pauli axis must be 0, 1 or 2");
  }
  return p;
}

// Places a 2x2 block at (row offset, column offset) of a 4x4 matrix.
void put_block(Matrix4& out, const Pauli& p, std::size_t r0, std::size_t c0) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out.m[r0 + r][c0 + c] += p[r][c];
}

}  // namespace

Matrix4 gamma0() {
  Matrix4 out;
  out.m[0][0] = out.m[1][1] = 1.0;
  out.m[2][2] = out.m[3][3] = -1.0;
  return out;
}

Matrix4 alpha(int axis) {
  Matrix4 out;
  const Pauli p = pauli(axis);
  put_block(out, p, 0, 2);
  put_block(out, p, 2, 0);
  return out;
}

Matrix4 sigma_projection(const UnitVector3& n) {
  // n.sigma = [[nz, nx - i ny], [nx + i ny, -nz]]
  const cplx up{n.z(), 0.0};
  const cplx lower{n.x(), n.y()};
  Pauli block{};
  block[0][0] = up;
  block[0][1] = std::conj(lower);
  block[1][0] = lower;
  block[1][1] = -up;
  Matrix4 out;
  put_block(out, block, 0, 0);
  put_block(out, block, 2, 2);
  return out;
}

Spinor4 leading_order_spinor(Spin s) {
  Spinor4 out;
  out[s == Spin::up ? 0 : 1] = 1.0;
  return out;
}

Spinor4 detection_spinor(Spin s, Vec3 r, const PhysicalConfig& cfg) {
  constexpr cplx i{0.0, 1.0};
  const cplx denom{cfg.d * cfg.d, cfg.Z / cfg.P};
  const cplx pre = kSmallComponentPhase * 0.5 / denom;
  const double d2P = cfg.d * cfg.d * cfg.P;
  Spinor4 out;
  if (s == Spin::up) {
    out[0] = 1.0;
    out[2] = pre * (i * r.z + d2P);
    out[3] = pre * (i * r.x - r.y);
  } else {
    out[1] = 1.0;
    out[2] = pre * (i * r.x + r.y);
    out[3] = pre * (-i * r.z - d2P);
  }
  return out;
}

Spinor4 detection_spinor(Spin s, Vec3 r, const PhysicalConfig& cfg, SpinMode mode) {
  return mode == SpinMode::full ? detection_spinor(s, r, cfg) : leading_order_spinor(s);
}

}  // namespace bellwave
