#pragma once

// Parameter sweeps over (kappa, zeta) and the closed-form versus quadrature
// validation report. Rows are computed concurrently and returned in a
// fixed order (kappa outer, zeta inner).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bellwave/chsh.hpp"

namespace bellwave {

enum class Spacing { linear, log };
enum class SweepMethod { closed, numeric, both };

struct ZetaGrid {
  double min = 0.0;
  double max = 5.0;
  int count = 501;
  Spacing spacing = Spacing::linear;

  void validate() const;
  std::vector<double> points() const;
};

struct SweepRequest {
  std::vector<double> kappa_list{0.5, 1.0};
  ZetaGrid zeta_grid;
  SweepMethod method = SweepMethod::closed;
  AnalyzerSettings settings;
  NumericOptions numeric;
  double d = kDefaultWidth;

  void validate() const;
};

struct SweepRow {
  double kappa = 0.0;
  double zeta = 0.0;
  double B = 0.0;
  double absB = 0.0;
  double F_perp = 0.0;
  double Phi_par = 0.0;
  std::optional<double> B_numeric;  // set for SweepMethod::both
  double err = 0.0;
};

/// jobs bounds the worker threads; output order does not depend on it.
std::vector<SweepRow> run_sweep(const SweepRequest& req, int jobs = 1);

/// %.9g, the fixed float format of every emitted table.
std::string format_number(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, SweepMethod method);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows, SweepMethod method);

struct ValidationRequest {
  std::vector<double> kappa_list{0.5, 1.0};
  std::vector<double> zeta_list{0.0, 0.25, 0.5, 1.0, 2.0};
  AnalyzerSettings settings;
  NumericOptions numeric;
  double d = kDefaultWidth;
  double tolerance = 1e-6;
};

struct ValidationRow {
  double zeta = 0.0;
  double kappa = 0.0;
  std::string setting_pair;  // "a,b", "a,b'", "a',b" or "a',b'"
  double closed = 0.0;
  double numeric = 0.0;
  double abs_diff = 0.0;
  double quad_err = 0.0;
  bool pass = false;
  std::string note;  // failure reason, e.g. non-convergence
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  double max_diff = 0.0;
  int failures = 0;
};

/// Compares the quadrature correlator against the closed form for every
/// (kappa, zeta, setting pair). A row passes iff
/// abs_diff <= max(tolerance, 10 * quad_err). Non-convergent quadrature
/// marks the row failed with the best estimate; it does not abort.
ValidationReport run_validation(const ValidationRequest& req, int jobs = 1);

void write_validation_csv(std::ostream& out, const ValidationReport& report);
void write_validation_summary(std::ostream& out, const ValidationReport& report, double tolerance);

}  // namespace bellwave
