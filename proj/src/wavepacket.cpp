#include "bellwave/wavepacket.hpp"

#include <cmath>
#include <numbers>

namespace bellwave {

namespace {

constexpr cplx kI{0.0, 1.0};

// (sigma . p / 2) chi_s for a complex 3-vector p, times the small-component phase.
void fill_small_components(Spinor4& out, Spin s, cplx px, cplx py, cplx pz) {
  const cplx h = 0.5 * kSmallComponentPhase;
  if (s == Spin::up) {
    out[2] = h * pz;
    out[3] = h * (px + kI * py);
  } else {
    out[2] = h * (px - kI * py);
    out[3] = -h * pz;
  }
}

double kinetic_energy(double p2, Dispersion dispersion) {
  if (dispersion == Dispersion::quadratic) return 0.5 * p2;
  return p2 / (std::sqrt(1.0 + p2) + 1.0);  // sqrt(1 + p^2) - 1 without cancellation
}

MultiIntegrand momentum_integrand(Vec3 r, double t, const MomentumSpectrum& spec, Spin s,
                                  PacketQuadratureOptions opts) {
  return [r, t, spec, s, opts](std::span<const double> p, std::span<cplx> out) {
    const Vec3 P{p[0], p[1], p[2]};
    const double amp = spectral_amplitude(P, spec);
    const double phase = dot(P, r) - kinetic_energy(P.norm2(), opts.dispersion) * t;
    const cplx wave = amp * std::polar(1.0, phase);
    Spinor4 u = leading_order_spinor(s);
    if (opts.mode == SpinMode::full) fill_small_components(u, s, P.x, P.y, P.z);
    for (std::size_t k = 0; k < 4; ++k) out[k] = wave * u[k];
  };
}

std::vector<AxisScale> momentum_axes(const MomentumSpectrum& spec) {
  const double w = 1.0 / spec.d;
  return {{spec.P0.x, w}, {spec.P0.y, w}, {spec.P0.z, w}};
}

Spinor4 finish_momentum_integral(const std::vector<cplx>& values, double t) {
  // (2 pi)^{-3/2} and the rest-energy phase
  const cplx pre = std::pow(2.0 * std::numbers::pi, -1.5) * std::polar(1.0, -t);
  Spinor4 out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = pre * values[k];
  return out;
}

}  // namespace

void MomentumSpectrum::validate() const {
  if (!(d > 0.0) || !std::isfinite(d)) throw ValidationError("spectrum width d must be positive");
  if (!std::isfinite(P0.norm2())) throw ValidationError("central momentum must be finite");
}

double momentum_weight(Vec3 P, const MomentumSpectrum& spec) {
  const double d2 = spec.d * spec.d;
  return std::pow(2.0 * std::numbers::pi * d2, 1.5) * std::exp(-0.5 * d2 * (P - spec.P0).norm2());
}

double spectral_amplitude(Vec3 P, const MomentumSpectrum& spec) {
  const double d2 = spec.d * spec.d;
  return std::pow(d2 / std::numbers::pi, 0.75) * std::exp(-0.5 * d2 * (P - spec.P0).norm2());
}

PacketEnvelope packet_envelope(Vec3 r, double t, const MomentumSpectrum& spec) {
  spec.validate();
  if (t < 0.0) throw ValidationError("time must be non-negative");
  const double d2 = spec.d * spec.d;
  const double L2 = diffusion_length_sq(t);
  const cplx D{d2, L2};
  const cplx N = std::pow(spec.d / (std::sqrt(std::numbers::pi) * D), 1.5);
  const cplx exponent =
      (-r.norm2() + 2.0 * kI * d2 * dot(spec.P0, r) - kI * d2 * spec.P0.norm2() * L2) / (2.0 * D);
  return {N * std::polar(1.0, -t) * std::exp(exponent), N, L2, D};
}

double density_width(double t, double d) { return std::abs(cplx{d * d, t}) / d; }

Spinor4 position_spinor(Spin s, Vec3 r, double t, const MomentumSpectrum& spec, SpinMode mode) {
  Spinor4 out = leading_order_spinor(s);
  if (mode == SpinMode::leading) return out;
  const double d2 = spec.d * spec.d;
  const cplx D{d2, diffusion_length_sq(t)};
  auto effective = [&](double rk, double p0k) { return (kI * rk + d2 * p0k) / D; };
  fill_small_components(out, s, effective(r.x, spec.P0.x), effective(r.y, spec.P0.y),
                        effective(r.z, spec.P0.z));
  return out;
}

Spinor4 packet_closed(Vec3 r, double t, const MomentumSpectrum& spec, Spin s, SpinMode mode) {
  const PacketEnvelope env = packet_envelope(r, t, spec);
  return env.value * position_spinor(s, r, t, spec, mode);
}

Spinor4 packet_quadrature(Vec3 r, double t, const MomentumSpectrum& spec, Spin s,
                          const QuadratureSpec& q, PacketQuadratureOptions opts) {
  spec.validate();
  if (t < 0.0) throw ValidationError("time must be non-negative");
  QuadratureSpec local = q;
  local.axes = momentum_axes(spec);
  const auto results = integrate(momentum_integrand(r, t, spec, s, opts), 4, local);
  std::vector<cplx> values(4);
  for (std::size_t k = 0; k < 4; ++k) values[k] = results[k].value;
  return finish_momentum_integral(values, t);
}

Spinor4 packet_quadrature_fixed(Vec3 r, double t, const MomentumSpectrum& spec, Spin s, int nodes,
                                PacketQuadratureOptions opts) {
  spec.validate();
  const auto values =
      integrate_fixed(momentum_integrand(r, t, spec, s, opts), 4, momentum_axes(spec), nodes);
  return finish_momentum_integral(values, t);
}

double packet_norm(double t, const MomentumSpectrum& spec, Spin s, SpinMode mode, int nodes) {
  const Vec3 c = t * spec.P0;
  const double w = density_width(t, spec.d) / std::numbers::sqrt2;
  MultiIntegrand f = [&](std::span<const double> x, std::span<cplx> out) {
    out[0] = packet_closed({x[0], x[1], x[2]}, t, spec, s, mode).norm2();
  };
  return integrate_fixed(f, 1, {{c.x, w}, {c.y, w}, {c.z, w}}, nodes).front().real();
}

double packet_second_moment(double t, const MomentumSpectrum& spec, int axis, int nodes) {
  const Vec3 c = t * spec.P0;
  const double centre[3] = {c.x, c.y, c.z};
  const double w = density_width(t, spec.d) / std::numbers::sqrt2;
  MultiIntegrand f = [&](std::span<const double> x, std::span<cplx> out) {
    const double rho = std::norm(packet_envelope({x[0], x[1], x[2]}, t, spec).value);
    const double dx = x[axis] - centre[axis];
    out[0] = rho;
    out[1] = rho * dx * dx;
  };
  const auto v = integrate_fixed(f, 2, {{c.x, w}, {c.y, w}, {c.z, w}}, nodes);
  return v[1].real() / v[0].real();
}

}  // namespace bellwave
