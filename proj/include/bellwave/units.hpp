#pragma once

// Natural units hbar = m = c = 1 throughout, so lengths are in Compton
// wavelengths, momenta in units of mc and times in hbar/(mc^2).

#include <stdexcept>
#include <string>

namespace bellwave {

/// Raised when a parameter set violates a type invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by detection_time when the packets do not move (P = 0).
class UndefinedDetectionTime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Momenta at or above this fraction of mc are rejected unless explicitly
/// allowed; the quadratic dispersion used everywhere assumes P << mc.
inline constexpr double kRelativisticCutoff = 0.1;

/// Packet width used when only (zeta, kappa) are given. Keeps the
/// (1/d)^2 spinor corrections near 1e-6.
inline constexpr double kDefaultWidth = 1000.0;

struct PhysicalConfig {
  double d = kDefaultWidth;  // initial packet width
  double P = 1.0 / kDefaultWidth;  // central momentum magnitude
  double Z = 0.0;  // detector half-separation
  bool allow_relativistic = false;
};

struct DimensionlessPoint {
  double zeta = 0.0;   // Z / d
  double kappa = 1.0;  // P d
};

/// Throws ValidationError unless d > 0, P > 0, Z >= 0, all finite, and
/// P < kRelativisticCutoff (or the override is set).
void validate(const PhysicalConfig& cfg);
void validate(const DimensionlessPoint& pt);

DimensionlessPoint to_dimensionless(const PhysicalConfig& cfg);

/// Inverse of to_dimensionless at a chosen width d.
PhysicalConfig from_dimensionless(const DimensionlessPoint& pt, double d = kDefaultWidth,
                                  bool allow_relativistic = false);

/// Arrival time of the packet peaks at the detector planes, T = Z m / P.
double detection_time(const PhysicalConfig& cfg);

/// Squared quantum diffusion length L^2 = hbar t / m.
inline double diffusion_length_sq(double t) { return t; }

std::string describe(const PhysicalConfig& cfg);

}  // namespace bellwave
