#pragma once

// Free Gaussian Dirac wavepacket for a single electron: the momentum
// spectrum, the closed-form real-space packet, and a direct momentum-space
// quadrature of the plane-wave superposition that serves as its oracle.

#include "bellwave/quadrature.hpp"
#include "bellwave/spinor.hpp"

namespace bellwave {

struct MomentumSpectrum {
  Vec3 P0;          // central momentum
  double d = 1.0;   // width parameter

  void validate() const;
};

/// F(P, P0) = (2 pi d^2)^{3/2} exp(-d^2 |P - P0|^2 / 2); (2 pi)^-3 int F d^3P = 1.
double momentum_weight(Vec3 P, const MomentumSpectrum& spec);

/// Amplitude a(P) = (d^2/pi)^{3/4} exp(-d^2 |P - P0|^2 / 2): the same Gaussian
/// as F, scaled so that (2 pi)^{-3/2} int a(P) e^{iP.r} d^3P is unit-normalized.
double spectral_amplitude(Vec3 P, const MomentumSpectrum& spec);

/// Scalar part of the closed-form packet at (r, t).
struct PacketEnvelope {
  cplx value;   // N e^{-it} exp[(-r^2 + 2i d^2 P0.r)/(2(d^2+iL^2))] exp[-i d^2 P0^2 L^2/(2(d^2+iL^2))]
  cplx N;       // (d / (sqrt(pi) (d^2 + i L^2)))^{3/2}
  double L2;    // t
  cplx width_denominator;  // d^2 + i L^2
};

PacketEnvelope packet_envelope(Vec3 r, double t, const MomentumSpectrum& spec);

/// Width s(t) = |d^2 + i L^2| / d of the density |psi|^2 ~ exp(-|r - P0 t|^2 / s^2).
double density_width(double t, double d);

/// Position-space spinor obtained by integrating the momentum spinor
/// (chi_s, e^{i pi/4} (sigma.P / 2) chi_s) against the Gaussian: P is
/// replaced by (i r + d^2 P0)/(d^2 + i L^2).
Spinor4 position_spinor(Spin s, Vec3 r, double t, const MomentumSpectrum& spec, SpinMode mode);

/// Closed-form packet Psi_s(r, t; P0).
Spinor4 packet_closed(Vec3 r, double t, const MomentumSpectrum& spec, Spin s,
                      SpinMode mode = SpinMode::full);

enum class Dispersion {
  quadratic,     // E = 1 + P^2/2, the form the closed expression assumes
  relativistic,  // E = sqrt(1 + P^2), sensitivity studies only
};

struct PacketQuadratureOptions {
  SpinMode mode = SpinMode::full;
  Dispersion dispersion = Dispersion::quadratic;
};

/// Momentum-space quadrature of (2 pi)^{-3/2} int a(P) u_s(P) e^{i(P.r - E t)} d^3P.
/// q supplies node counts and tolerance; its axes are overwritten with the
/// spectrum's centre and width 1/d. Throws NonConvergenceError.
Spinor4 packet_quadrature(Vec3 r, double t, const MomentumSpectrum& spec, Spin s,
                          const QuadratureSpec& q, PacketQuadratureOptions opts = {});

/// Same integral at a fixed number of nodes per axis (no convergence loop).
Spinor4 packet_quadrature_fixed(Vec3 r, double t, const MomentumSpectrum& spec, Spin s, int nodes,
                                PacketQuadratureOptions opts = {});

/// Position-space quadrature of int Psi^dagger Psi d^3r for the closed form.
double packet_norm(double t, const MomentumSpectrum& spec, Spin s, SpinMode mode = SpinMode::full,
                   int nodes = 16);

/// Per-axis second moment <(x_k - P0_k t)^2> of |Psi|^2, by quadrature.
double packet_second_moment(double t, const MomentumSpectrum& spec, int axis, int nodes = 32);

}  // namespace bellwave
