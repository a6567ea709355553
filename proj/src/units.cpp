#include "bellwave/units.hpp"

#include <cmath>
#include <sstream>

namespace bellwave {

void validate(const PhysicalConfig& cfg) {
  if (!std::isfinite(cfg.d) || !std::isfinite(cfg.P) || !std::isfinite(cfg.Z)) {
    throw ValidationError("physical parameters must be finite");
  }
  if (cfg.d <= 0.0) throw ValidationError("packet width d must be positive");
  if (cfg.P <= 0.0) throw ValidationError("momentum P must be positive");
  if (cfg.Z < 0.0) throw ValidationError("detector half-separation Z must be non-negative");
  if (cfg.P >= kRelativisticCutoff && !cfg.allow_relativistic) {
    std::ostringstream msg;
    msg << "P = " << cfg.P << " mc is outside the nonrelativistic range (P < "
        << kRelativisticCutoff << "); set allow_relativistic to override";
    throw ValidationError(msg.str());
  }
}

void validate(const DimensionlessPoint& pt) {
  if (!std::isfinite(pt.zeta) || !std::isfinite(pt.kappa)) {
    throw ValidationError("zeta and kappa must be finite");
  }
  if (pt.zeta < 0.0) throw ValidationError("zeta must be non-negative");
  if (pt.kappa <= 0.0) throw ValidationError("kappa must be positive");
}

DimensionlessPoint to_dimensionless(const PhysicalConfig& cfg) {
  validate(cfg);
  return {cfg.Z / cfg.d, cfg.P * cfg.d};
}

PhysicalConfig from_dimensionless(const DimensionlessPoint& pt, double d,
                                  bool allow_relativistic) {
  validate(pt);
  if (!(d > 0.0) || !std::isfinite(d)) throw ValidationError("packet width d must be positive");
  PhysicalConfig cfg{d, pt.kappa / d, pt.zeta * d, allow_relativistic};
  validate(cfg);
  return cfg;
}

double detection_time(const PhysicalConfig& cfg) {
  if (cfg.P == 0.0) throw UndefinedDetectionTime("detection time undefined for P = 0");
  if (cfg.P < 0.0 || cfg.Z < 0.0) throw ValidationError("detection time needs P > 0 and Z >= 0");
  return cfg.Z / cfg.P;
}

std::string describe(const PhysicalConfig& cfg) {
  std::ostringstream out;
  out << "d=" << cfg.d << " P=" << cfg.P << " Z=" << cfg.Z;
  return out.str();
}

}  // namespace bellwave
