#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bellwave/correlator.hpp"

namespace bellwave {

struct AnalyzerSettings {
  UnitVector3 a = UnitVector3(0.0, 0.0, 1.0);
  UnitVector3 a_prime = UnitVector3(1.0, 0.0, 0.0);
  UnitVector3 b = UnitVector3::normalized(1.0, 0.0, 1.0);
  UnitVector3 b_prime = UnitVector3::normalized(-1.0, 0.0, 1.0);

  /// (a,b), (a,b'), (a',b), (a',b') in the order the CHSH sum uses them.
  std::array<SettingPair, 4> pairs() const;
};

/// Combines four correlators as C(a,b) + C(a,b') + C(a',b) - C(a',b').
double chsh_combination(const std::array<double, 4>& c);

struct BellDecomposition {
  double B = 0.0;
  double F_perp = 1.0;   // transverse overlap factor
  double Phi_par = 0.0;  // longitudinal cross-phase [rad]
};

double overlap_factor(const DimensionlessPoint& pt);
double cross_phase(const DimensionlessPoint& pt);

/// B = -sqrt(2) [1 + F_perp cos(Phi_par)].
BellDecomposition bell_closed(const DimensionlessPoint& pt);

struct BellEstimate {
  double B = 0.0;
  double err = 0.0;
  std::array<CorrelatorValue, 4> correlators{};
};

/// CHSH sum from four correlators. The numeric route evaluates at
/// from_dimensionless(pt, d) and shares one quadrature grid.
BellEstimate bell_from_correlators(const DimensionlessPoint& pt, const AnalyzerSettings& s,
                                   Method method, const NumericOptions& opts = {},
                                   double d = kDefaultWidth);

/// sqrt(2) (1 + sech(4 kappa^2)).
double bell_limit_infinity(double kappa);

/// (1/2) sqrt(arcosh(1 / (sqrt 2 - 1))): kappa at which |B(infinity)| = 2.
double kappa_star();

struct CrossingScan {
  std::optional<double> first;     // smallest zeta with |B| = 2
  std::vector<double> crossings;   // every sign change of |B| - 2 found, refined
  double zeta_max = 0.0;           // extent of the scan
};

/// Scans |B(zeta; kappa)| - 2 over zeta in (0, zeta_max] and bisects each
/// sign change to an interval below 1e-10. If no crossing is found but the
/// zeta -> infinity limit lies below 2, the scan is extended geometrically
/// (up to 1e12) until one is bracketed.
CrossingScan scan_classical_crossings(double kappa, double zeta_max = 1e3);

std::optional<double> classical_crossing(double kappa);

}  // namespace bellwave
