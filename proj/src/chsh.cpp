#include "bellwave/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bellwave {

std::array<SettingPair, 4> AnalyzerSettings::pairs() const {
  return {SettingPair{a, b}, SettingPair{a, b_prime}, SettingPair{a_prime, b},
          SettingPair{a_prime, b_prime}};
}

double chsh_combination(const std::array<double, 4>& c) { return c[0] + c[1] + c[2] - c[3]; }

double overlap_factor(const DimensionlessPoint& pt) {
  validate(pt);
  const double k2 = pt.kappa * pt.kappa;
  const double z2 = pt.zeta * pt.zeta;
  return 1.0 / std::cosh(4.0 * k2 * z2 / (k2 + z2));
}

double cross_phase(const DimensionlessPoint& pt) {
  validate(pt);
  const double k2 = pt.kappa * pt.kappa;
  return 4.0 * k2 * pt.kappa * pt.zeta / (k2 + pt.zeta * pt.zeta);
}

BellDecomposition bell_closed(const DimensionlessPoint& pt) {
  BellDecomposition out;
  out.F_perp = overlap_factor(pt);
  out.Phi_par = cross_phase(pt);
  out.B = -std::numbers::sqrt2 * (1.0 + out.F_perp * std::cos(out.Phi_par));
  return out;
}

BellEstimate bell_from_correlators(const DimensionlessPoint& pt, const AnalyzerSettings& s,
                                   Method method, const NumericOptions& opts, double d) {
  const auto pairs = s.pairs();
  BellEstimate out;
  if (method == Method::closed) {
    for (std::size_t k = 0; k < 4; ++k) {
      out.correlators[k] = correlator_dimensionless(pairs[k].first, pairs[k].second, pt);
    }
  } else {
    const PhysicalConfig cfg = from_dimensionless(pt, d);
    const auto values =
        correlator_numeric(std::vector<SettingPair>(pairs.begin(), pairs.end()), cfg, opts);
    for (std::size_t k = 0; k < 4; ++k) out.correlators[k] = values[k];
  }
  std::array<double, 4> c{};
  for (std::size_t k = 0; k < 4; ++k) {
    c[k] = out.correlators[k].value;
    out.err += out.correlators[k].err;
  }
  out.B = chsh_combination(c);
  return out;
}

double bell_limit_infinity(double kappa) {
  if (!(kappa > 0.0)) throw ValidationError("kappa must be positive");
  return std::numbers::sqrt2 * (1.0 + 1.0 / std::cosh(4.0 * kappa * kappa));
}

double kappa_star() {
  return 0.5 * std::sqrt(std::acosh(1.0 / (std::numbers::sqrt2 - 1.0)));
}

namespace {

double excess(double zeta, double kappa) {
  return std::abs(bell_closed({zeta, kappa}).B) - 2.0;
}

double bisect(double lo, double hi, double kappa) {
  double flo = excess(lo, kappa);
  while (hi - lo >= 1e-10 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fmid = excess(mid, kappa);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CrossingScan scan_classical_crossings(double kappa, double zeta_max) {
  if (!(kappa > 0.0)) throw ValidationError("kappa must be positive");
  if (!(zeta_max > 0.0)) throw ValidationError("zeta_max must be positive");

  // Dense linear grid where the structure lives (zeta of order kappa),
  // logarithmic beyond.
  std::vector<double> grid;
  const double linear_end = std::min(zeta_max, std::max(10.0, 10.0 * kappa));
  const int linear_steps = 20000;
  for (int i = 1; i <= linear_steps; ++i) grid.push_back(linear_end * i / linear_steps);
  if (zeta_max > linear_end) {
    const int log_steps = 4000;
    const double ratio = std::log(zeta_max / linear_end);
    for (int i = 1; i <= log_steps; ++i) grid.push_back(linear_end * std::exp(ratio * i / log_steps));
  }

  CrossingScan out;
  out.zeta_max = zeta_max;
  double prev_z = 0.0;
  double prev_f = excess(0.0, kappa);
  for (double z : grid) {
    const double f = excess(z, kappa);
    if ((f > 0.0) != (prev_f > 0.0)) out.crossings.push_back(bisect(prev_z, z, kappa));
    prev_z = z;
    prev_f = f;
  }

  if (out.crossings.empty() && bell_limit_infinity(kappa) < 2.0) {
    double z = zeta_max;
    while (z < 1e12) {
      const double next = 2.0 * z;
      const double f = excess(next, kappa);
      if ((f > 0.0) != (prev_f > 0.0)) {
        out.crossings.push_back(bisect(z, next, kappa));
        out.zeta_max = next;
        break;
      }
      z = next;
      prev_f = f;
      out.zeta_max = z;
    }
  }
  if (!out.crossings.empty()) out.first = out.crossings.front();
  return out;
}

std::optional<double> classical_crossing(double kappa) { return scan_classical_crossings(kappa).first; }

}  // namespace bellwave
