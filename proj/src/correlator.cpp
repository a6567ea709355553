#include "bellwave/correlator.hpp"

#include <cmath>
#include <numbers>

namespace bellwave {

namespace {

struct SpinTerms {
  double zz;         // a_z b_z
  double parallel;   // a_x b_x + a_y b_y
  double crossed;    // a_x b_y - a_y b_x
};

SpinTerms spin_terms(const UnitVector3& a, const UnitVector3& b) {
  return {a.z() * b.z(), a.x() * b.x() + a.y() * b.y(), a.x() * b.y() - a.y() * b.x()};
}

}  // namespace

double transverse_width(const PhysicalConfig& cfg) {
  const double d2 = cfg.d * cfg.d;
  const double zp = cfg.Z / cfg.P;
  return std::sqrt((d2 * d2 + zp * zp) / d2) / std::numbers::sqrt2;
}

CorrelatorIntegrals correlator_integrals(const std::vector<SettingPair>& pairs,
                                         const PhysicalConfig& cfg, const NumericOptions& opts) {
  validate(cfg);
  opts.window_a.validate();
  opts.window_b.validate();

  std::vector<Matrix4> left, right;
  left.reserve(pairs.size());
  right.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    left.push_back(sigma_projection(a));
    right.push_back(sigma_projection(b));
  }

  const std::size_t npairs = pairs.size();
  MultiIntegrand f = [&](std::span<const double> x, std::span<cplx> out) {
    const double w = window_weight(opts.window_a, x[0], x[1]) * window_weight(opts.window_b, x[2], x[3]);
    const TwoParticleAmplitude psi = singlet_at_detection(x[0], x[1], x[2], x[3], cfg, opts.spin_mode);
    for (std::size_t k = 0; k < npairs; ++k) {
      // (a.Sigma (x) b.Sigma) psi = Ma psi Mb^T in the matrix picture
      cplx acc{};
      for (std::size_t i = 0; i < 4; ++i) {
        std::array<cplx, 4> row{};
        for (std::size_t m = 0; m < 4; ++m) {
          const cplx lim = left[k](i, m);
          if (lim == cplx{}) continue;
          for (std::size_t j = 0; j < 4; ++j) row[j] += lim * psi(m, j);
        }
        for (std::size_t j = 0; j < 4; ++j) {
          cplx v{};
          for (std::size_t l = 0; l < 4; ++l) v += row[l] * right[k](j, l);
          acc += std::conj(psi(i, j)) * v;
        }
      }
      out[k] = w * acc;
    }
    out[npairs] = w * psi.norm2();
  };

  QuadratureSpec spec = opts.quad;
  const double width = transverse_width(cfg);
  spec.axes.assign(4, AxisScale{0.0, width});
  auto results = integrate(f, npairs + 1, spec);

  CorrelatorIntegrals out;
  out.denominator = results.back();
  results.pop_back();
  out.numerators = std::move(results);
  return out;
}

std::vector<CorrelatorValue> correlator_numeric(const std::vector<SettingPair>& pairs,
                                                const PhysicalConfig& cfg,
                                                const NumericOptions& opts) {
  const CorrelatorIntegrals ints = correlator_integrals(pairs, cfg, opts);
  const double den = std::abs(ints.denominator.value);
  if (!(den >= 1e-300)) {
    throw DegenerateDenominatorError("correlator denominator vanishes (no overlap with the windows)");
  }
  std::vector<CorrelatorValue> out;
  out.reserve(pairs.size());
  for (const auto& num : ints.numerators) {
    const cplx ratio = num.value / ints.denominator.value;
    const double err = num.abs_err_estimate / den +
                       std::abs(num.value) * ints.denominator.abs_err_estimate / (den * den);
    out.push_back({ratio.real(), Method::numeric, err});
  }
  return out;
}

CorrelatorValue correlator_numeric(const UnitVector3& a, const UnitVector3& b,
                                   const PhysicalConfig& cfg, const NumericOptions& opts) {
  return correlator_numeric(std::vector<SettingPair>{{a, b}}, cfg, opts).front();
}

CorrelatorValue correlator_closed(const UnitVector3& a, const UnitVector3& b,
                                  const PhysicalConfig& cfg) {
  validate(cfg);
  const double d2 = cfg.d * cfg.d;
  const double zp = cfg.Z / cfg.P;
  const double denom = d2 * d2 + zp * zp;
  const double decay = 4.0 * d2 * cfg.Z * cfg.Z / denom;
  const double phase = 4.0 * d2 * d2 * cfg.P * cfg.Z / denom;
  const double prefactor = 2.0 * std::exp(-decay) / (1.0 + std::exp(-2.0 * decay));
  const SpinTerms s = spin_terms(a, b);
  const double value = -s.zz - prefactor * (std::cos(phase) * s.parallel + std::sin(phase) * s.crossed);
  return {value, Method::closed, 0.0};
}

CorrelatorValue correlator_dimensionless(const UnitVector3& a, const UnitVector3& b,
                                         const DimensionlessPoint& pt) {
  validate(pt);
  const double k2 = pt.kappa * pt.kappa;
  const double z2 = pt.zeta * pt.zeta;
  const double decay = 4.0 * k2 * z2 / (k2 + z2);
  const double phase = 4.0 * k2 * pt.kappa * pt.zeta / (k2 + z2);
  const SpinTerms s = spin_terms(a, b);
  const double value =
      -s.zz - (std::cos(phase) * s.parallel + std::sin(phase) * s.crossed) / std::cosh(decay);
  return {value, Method::closed, 0.0};
}

double correlator_asymptotic(const UnitVector3& a, const UnitVector3& b, Regime regime,
                             double kappa) {
  const SpinTerms s = spin_terms(a, b);
  if (regime == Regime::coincident) return -s.zz - s.parallel;
  if (!(kappa > 0.0)) throw ValidationError("kappa must be positive");
  return -s.zz - s.parallel / std::cosh(4.0 * kappa * kappa);
}

}  // namespace bellwave
