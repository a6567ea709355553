#pragma once

// Four-component spinor algebra in the Dirac representation, with the
// spin operator Sigma = diag(sigma, sigma).

#include <array>
#include <complex>
#include <numbers>

#include "bellwave/units.hpp"

namespace bellwave {

using cplx = std::complex<double>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
  double norm2() const { return dot(*this, *this); }
};

/// Analyzer direction. Construction rejects vectors whose length differs
/// from one by more than 1e-12; use normalized() for raw directions.
class UnitVector3 {
 public:
  static constexpr double kTolerance = 1e-12;

  UnitVector3() = default;  // z-hat
  UnitVector3(double x, double y, double z);
  static UnitVector3 normalized(double x, double y, double z);

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  Vec3 vec() const { return v_; }

 private:
  struct Trusted {};
  UnitVector3(Vec3 v, Trusted) : v_(v) {}
  Vec3 v_{0.0, 0.0, 1.0};
};

enum class Spin { up, down };

/// leading: small (lower) spinor components dropped; full: first order in
/// the Compton wavelength.
enum class SpinMode { leading, full };

struct Spinor4 {
  std::array<cplx, 4> c{};

  cplx& operator[](std::size_t i) { return c[i]; }
  const cplx& operator[](std::size_t i) const { return c[i]; }

  friend Spinor4 operator*(cplx s, const Spinor4& v) {
    Spinor4 out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = s * v.c[i];
    return out;
  }
  friend Spinor4 operator+(const Spinor4& a, const Spinor4& b) {
    Spinor4 out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
  }
  friend Spinor4 operator-(const Spinor4& a, const Spinor4& b) {
    Spinor4 out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
  }
  double norm2() const;
};

/// Hermitian inner product <a|b>.
cplx inner(const Spinor4& a, const Spinor4& b);

struct Matrix4 {
  std::array<std::array<cplx, 4>, 4> m{};

  static Matrix4 identity();
  cplx& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  Matrix4 adjoint() const;
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  friend Matrix4 operator+(const Matrix4& a, const Matrix4& b);
  friend Spinor4 operator*(const Matrix4& a, const Spinor4& v);
  friend double max_abs_diff(const Matrix4& a, const Matrix4& b);
};

/// Dirac-representation matrices: gamma^0 = diag(1, 1, -1, -1) and
/// alpha_k = offdiag(sigma_k, sigma_k).
Matrix4 gamma0();
Matrix4 alpha(int axis);

/// n . Sigma with Sigma = diag(sigma, sigma).
Matrix4 sigma_projection(const UnitVector3& n);

/// (1,0,0,0) for up, (0,1,0,0) for down.
Spinor4 leading_order_spinor(Spin s);

/// Position-dependent spinor of a packet at the detection time T = Z/P,
/// with common denominator d^2 + i Z/P and the e^{i pi/4} convention on the
/// small components. The large component equals exactly 1.
Spinor4 detection_spinor(Spin s, Vec3 r, const PhysicalConfig& cfg);

/// detection_spinor or leading_order_spinor according to the mode.
Spinor4 detection_spinor(Spin s, Vec3 r, const PhysicalConfig& cfg, SpinMode mode);

/// Phase carried by the small spinor components.
inline const cplx kSmallComponentPhase = std::polar(1.0, std::numbers::pi / 4.0);

}  // namespace bellwave
