#include "bellwave/entangled.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bellwave {

namespace {
constexpr cplx kI{0.0, 1.0};
}

TwoParticleAmplitude TwoParticleAmplitude::swapped_indices() const {
  TwoParticleAmplitude out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.amp[i][j] = amp[j][i];
  return out;
}

double TwoParticleAmplitude::norm2() const {
  double s = 0.0;
  for (const auto& row : amp)
    for (const auto& v : row) s += std::norm(v);
  return s;
}

double TwoParticleAmplitude::max_abs() const {
  double m = 0.0;
  for (const auto& row : amp)
    for (const auto& v : row) m = std::max(m, std::abs(v));
  return m;
}

TwoParticleAmplitude operator+(const TwoParticleAmplitude& a, const TwoParticleAmplitude& b) {
  TwoParticleAmplitude out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.amp[i][j] = a.amp[i][j] + b.amp[i][j];
  return out;
}

TwoParticleAmplitude operator*(cplx s, const TwoParticleAmplitude& a) {
  TwoParticleAmplitude out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.amp[i][j] = s * a.amp[i][j];
  return out;
}

TwoParticleAmplitude outer(const Spinor4& first, const Spinor4& second) {
  TwoParticleAmplitude out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.amp[i][j] = first[i] * second[j];
  return out;
}

void DetectorWindow::validate() const {
  if (profile == WindowProfile::gaussian && (!(width > 0.0) || !std::isfinite(width))) {
    throw ValidationError("gaussian window width must be positive");
  }
}

double window_weight(const DetectorWindow& w, double x, double y) {
  if (w.profile == WindowProfile::uniform) return 1.0;
  return std::exp(-(x * x + y * y) / (2.0 * w.width * w.width));
}

cplx relative_phase_exponent(const PhysicalConfig& cfg) {
  const double d2 = cfg.d * cfg.d;
  return -4.0 * kI * d2 * cfg.P * cfg.Z / cplx{d2, cfg.Z / cfg.P};
}

cplx joint_envelope(double x1, double y1, double x2, double y2, const PhysicalConfig& cfg) {
  const double d2 = cfg.d * cfg.d;
  const double rho2 = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2;
  const cplx D{d2, cfg.Z / cfg.P};
  return std::exp((-(rho2 + 2.0 * cfg.Z * cfg.Z) + 2.0 * kI * d2 * cfg.P * cfg.Z) / (2.0 * D));
}

TwoParticleAmplitude singlet_at_detection(double x1, double y1, double x2, double y2,
                                          const PhysicalConfig& cfg, SpinMode mode) {
  validate(cfg);
  const double d2 = cfg.d * cfg.d;
  const cplx D{d2, cfg.Z / cfg.P};
  const cplx N = std::pow(cfg.d / (std::sqrt(std::numbers::pi) * D), 1.5);
  const cplx global = N * N * std::polar(1.0, -2.0 * cfg.Z / cfg.P) / std::numbers::sqrt2 *
                      joint_envelope(x1, y1, x2, y2, cfg);
  const Vec3 r1{x1, y1, cfg.Z};
  const Vec3 r2{x2, y2, -cfg.Z};
  const TwoParticleAmplitude direct = outer(detection_spinor(Spin::up, r1, cfg, mode),
                                            detection_spinor(Spin::down, r2, cfg, mode));
  const TwoParticleAmplitude exchanged = outer(detection_spinor(Spin::down, r1, cfg, mode),
                                               detection_spinor(Spin::up, r2, cfg, mode));
  return global * (direct + (-std::exp(relative_phase_exponent(cfg))) * exchanged);
}

TwoParticleAmplitude singlet_general(Vec3 r1, Vec3 r2, double t, const PhysicalConfig& cfg,
                                     SpinMode mode) {
  validate(cfg);
  const MomentumSpectrum forward{{0.0, 0.0, cfg.P}, cfg.d};
  const MomentumSpectrum backward{{0.0, 0.0, -cfg.P}, cfg.d};
  const TwoParticleAmplitude direct = outer(packet_closed(r1, t, forward, Spin::up, mode),
                                            packet_closed(r2, t, backward, Spin::down, mode));
  // (1 <-> 2): particle 2 carries the spin-up packet at r2, particle 1 the spin-down one at r1
  const TwoParticleAmplitude exchanged = outer(packet_closed(r1, t, backward, Spin::down, mode),
                                               packet_closed(r2, t, forward, Spin::up, mode));
  return (1.0 / std::numbers::sqrt2) * (direct + cplx{-1.0} * exchanged);
}

}  // namespace bellwave
