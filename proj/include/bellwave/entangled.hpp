#pragma once

// Two-electron singlet built from counter-propagating packets (P0 = +P z
// for the spin-up packet, -P z for spin-down), and the detector windows.

#include <array>

#include "bellwave/spinor.hpp"
#include "bellwave/units.hpp"
#include "bellwave/wavepacket.hpp"

namespace bellwave {

/// amp[i][j]: Dirac index i of particle 1, j of particle 2.
struct TwoParticleAmplitude {
  std::array<std::array<cplx, 4>, 4> amp{};

  cplx& operator()(std::size_t i, std::size_t j) { return amp[i][j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return amp[i][j]; }

  /// The amplitude with particle labels exchanged: out(i, j) = (*this)(j, i).
  TwoParticleAmplitude swapped_indices() const;
  double norm2() const;
  double max_abs() const;
};

TwoParticleAmplitude operator+(const TwoParticleAmplitude& a, const TwoParticleAmplitude& b);
TwoParticleAmplitude operator*(cplx s, const TwoParticleAmplitude& a);
TwoParticleAmplitude outer(const Spinor4& first, const Spinor4& second);

enum class WindowProfile { uniform, gaussian };

/// Detector A sits on z = +Z, detector B on z = -Z.
struct DetectorWindow {
  WindowProfile profile = WindowProfile::uniform;
  double width = 0.0;  // gaussian rms width (same length unit as positions)

  void validate() const;
};

/// 1 for uniform; exp(-(x^2 + y^2) / (2 w^2)) for gaussian.
double window_weight(const DetectorWindow& w, double x, double y);

/// Complex exponent of the spin-exchanged term's relative factor,
/// -4 i d^2 P Z / (d^2 + i Z / P).
cplx relative_phase_exponent(const PhysicalConfig& cfg);

/// The singlet on the detector planes (z1 = Z, z2 = -Z) at t = T in its
/// closed form:
///   (1/sqrt 2) N^2 e^{-2iZ/P} E(x1, y1, x2, y2)
///     [u_up(r1) (x) u_down(r2) - e^{rel} u_down(r1) (x) u_up(r2)].
TwoParticleAmplitude singlet_at_detection(double x1, double y1, double x2, double y2,
                                          const PhysicalConfig& cfg,
                                          SpinMode mode = SpinMode::leading);

/// Joint envelope E(x1, y1, x2, y2) of singlet_at_detection (without N^2 and phases).
cplx joint_envelope(double x1, double y1, double x2, double y2, const PhysicalConfig& cfg);

/// (1/sqrt 2)[Psi_up(r1; +P z) (x) Psi_down(r2; -P z) - (1 <-> 2)] from two
/// closed-form packets at arbitrary positions and time.
TwoParticleAmplitude singlet_general(Vec3 r1, Vec3 r2, double t, const PhysicalConfig& cfg,
                                     SpinMode mode = SpinMode::leading);

}  // namespace bellwave
