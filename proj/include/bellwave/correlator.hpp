#pragma once

// Windowed spin-spin correlator
//   C(a, b) = <Psi| (a.Sigma_1)(b.Sigma_2) |Psi>_W / <Psi|Psi>_W
// evaluated on the detector planes, either by 4D transverse quadrature of
// the singlet amplitude or through its closed form in (zeta, kappa).

#include <stdexcept>
#include <utility>
#include <vector>

#include "bellwave/entangled.hpp"
#include "bellwave/quadrature.hpp"
#include "bellwave/spinor.hpp"
#include "bellwave/units.hpp"

namespace bellwave {

enum class Method { closed, numeric };

struct CorrelatorValue {
  double value = 0.0;
  Method method = Method::closed;
  double err = 0.0;  // propagated quadrature error estimate; 0 for closed forms
};

class DegenerateDenominatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SettingPair = std::pair<UnitVector3, UnitVector3>;

struct NumericOptions {
  SpinMode spin_mode = SpinMode::leading;
  DetectorWindow window_a;
  DetectorWindow window_b;
  // nodes, tolerance and limits; axes are filled in from the configuration
  QuadratureSpec quad;
};

/// Raw shared-grid integrals: numerators for each setting pair, then the
/// denominator as the last entry.
struct CorrelatorIntegrals {
  std::vector<QuadResult> numerators;
  QuadResult denominator;
};

/// Transverse rms width sqrt((d^4 + Z^2/P^2) / d^2) / sqrt(2) of |Psi|^2 on a detector plane.
double transverse_width(const PhysicalConfig& cfg);

CorrelatorIntegrals correlator_integrals(const std::vector<SettingPair>& pairs,
                                         const PhysicalConfig& cfg, const NumericOptions& opts);

/// All pairs on one grid. Throws NonConvergenceError, DegenerateDenominatorError.
std::vector<CorrelatorValue> correlator_numeric(const std::vector<SettingPair>& pairs,
                                                const PhysicalConfig& cfg,
                                                const NumericOptions& opts = {});

CorrelatorValue correlator_numeric(const UnitVector3& a, const UnitVector3& b,
                                   const PhysicalConfig& cfg, const NumericOptions& opts = {});

/// Dimensional closed form with the 2 e^{-X} / (1 + e^{-2X}) prefactor.
CorrelatorValue correlator_closed(const UnitVector3& a, const UnitVector3& b,
                                  const PhysicalConfig& cfg);

/// -a_z b_z - sech(X)[cos(Phi)(a_x b_x + a_y b_y) + sin(Phi)(a_x b_y - a_y b_x)],
/// X = 4 k^2 z^2 / (k^2 + z^2), Phi = 4 k^3 z / (k^2 + z^2).
CorrelatorValue correlator_dimensionless(const UnitVector3& a, const UnitVector3& b,
                                         const DimensionlessPoint& pt);

enum class Regime { coincident, separated };

/// zeta = 0 and zeta -> infinity limits of correlator_dimensionless.
double correlator_asymptotic(const UnitVector3& a, const UnitVector3& b, Regime regime,
                             double kappa);

}  // namespace bellwave
