#include "bellwave/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "parallel.hpp"

namespace bellwave {

void ZetaGrid::validate() const {
  if (count < 2) throw ValidationError("zeta grid needs at least 2 points");
  if (!(min < max)) throw ValidationError("zeta grid needs min < max");
  if (min < 0.0) throw ValidationError("zeta grid must be non-negative");
  if (spacing == Spacing::log && !(min > 0.0)) {
    throw ValidationError("log-spaced zeta grid needs min > 0");
  }
}

std::vector<double> ZetaGrid::points() const {
  validate();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    out[i] = spacing == Spacing::linear ? min + f * (max - min)
                                        : min * std::pow(max / min, f);
  }
  out.back() = max;
  return out;
}

void SweepRequest::validate() const {
  if (kappa_list.empty()) throw ValidationError("kappa list must not be empty");
  for (double k : kappa_list) {
    if (!(k > 0.0) || !std::isfinite(k)) throw ValidationError("kappa values must be positive");
  }
  zeta_grid.validate();
}

std::vector<SweepRow> run_sweep(const SweepRequest& req, int jobs) {
  req.validate();
  const std::vector<double> zetas = req.zeta_grid.points();
  std::vector<SweepRow> rows(req.kappa_list.size() * zetas.size());
  detail::parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const double kappa = req.kappa_list[i / zetas.size()];
    const double zeta = zetas[i % zetas.size()];
    const DimensionlessPoint pt{zeta, kappa};
    const BellDecomposition closed = bell_closed(pt);
    SweepRow row{kappa, zeta, closed.B, std::abs(closed.B), closed.F_perp, closed.Phi_par, {}, 0.0};
    if (req.method != SweepMethod::closed) {
      const BellEstimate numeric =
          bell_from_correlators(pt, req.settings, Method::numeric, req.numeric, req.d);
      if (req.method == SweepMethod::numeric) {
        row.B = numeric.B;
        row.absB = std::abs(numeric.B);
      } else {
        row.B_numeric = numeric.B;
      }
      row.err = numeric.err;
    }
    rows[i] = row;
  });
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, SweepMethod method) {
  out << "kappa,zeta,B,absB,F_perp,Phi_par";
  if (method == SweepMethod::numeric) out << ",err";
  if (method == SweepMethod::both) out << ",B_numeric,abs_diff,err";
  out << '\n';
  for (const auto& r : rows) {
    out << format_number(r.kappa) << ',' << format_number(r.zeta) << ',' << format_number(r.B) << ','
        << format_number(r.absB) << ',' << format_number(r.F_perp) << ','
        << format_number(r.Phi_par);
    if (method == SweepMethod::numeric) out << ',' << format_number(r.err);
    if (method == SweepMethod::both) {
      out << ',' << format_number(r.B_numeric.value_or(NAN)) << ','
          << format_number(std::abs(r.B_numeric.value_or(NAN) - r.B)) << ','
          << format_number(r.err);
    }
    out << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows, SweepMethod method) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["kappa"] = r.kappa;
    j["zeta"] = r.zeta;
    j["B"] = r.B;
    j["absB"] = r.absB;
    j["F_perp"] = r.F_perp;
    j["Phi_par"] = r.Phi_par;
    if (method != SweepMethod::closed) j["err"] = r.err;
    if (r.B_numeric) j["B_numeric"] = *r.B_numeric;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

ValidationReport run_validation(const ValidationRequest& req, int jobs) {
  if (req.kappa_list.empty() || req.zeta_list.empty()) {
    throw ValidationError("validation grid must not be empty");
  }
  static const char* kPairNames[4] = {"a,b", "a,b'", "a',b", "a',b'"};
  const auto pairs = req.settings.pairs();
  const std::size_t npoints = req.kappa_list.size() * req.zeta_list.size();
  ValidationReport report;
  report.rows.resize(npoints * 4);

  detail::parallel_for(npoints, jobs, [&](std::size_t p) {
    const DimensionlessPoint pt{req.zeta_list[p % req.zeta_list.size()],
                                req.kappa_list[p / req.zeta_list.size()]};
    std::array<double, 4> numeric{};
    std::array<double, 4> errs{};
    std::string note;
    try {
      const PhysicalConfig cfg = from_dimensionless(pt, req.d);
      const auto values = correlator_numeric(
          std::vector<SettingPair>(pairs.begin(), pairs.end()), cfg, req.numeric);
      for (std::size_t k = 0; k < 4; ++k) {
        numeric[k] = values[k].value;
        errs[k] = values[k].err;
      }
    } catch (const NonConvergenceError& e) {
      const auto& best = e.best();
      const double den = std::abs(best.back().value);
      for (std::size_t k = 0; k < 4; ++k) {
        numeric[k] = den > 0.0 ? (best[k].value / best.back().value).real() : NAN;
        errs[k] = best[k].abs_err_estimate / den;
      }
      note = "quadrature did not converge; best estimate shown";
    } catch (const std::exception& e) {
      numeric.fill(NAN);
      errs.fill(NAN);
      note = e.what();
    }
    for (std::size_t k = 0; k < 4; ++k) {
      ValidationRow row;
      row.zeta = pt.zeta;
      row.kappa = pt.kappa;
      row.setting_pair = kPairNames[k];
      row.closed = correlator_dimensionless(pairs[k].first, pairs[k].second, pt).value;
      row.numeric = numeric[k];
      row.abs_diff = std::abs(row.numeric - row.closed);
      row.quad_err = errs[k];
      row.note = note;
      row.pass = note.empty() && row.abs_diff <= std::max(req.tolerance, 10.0 * row.quad_err);
      report.rows[p * 4 + k] = std::move(row);
    }
  });

  for (const auto& row : report.rows) {
    if (std::isfinite(row.abs_diff)) report.max_diff = std::max(report.max_diff, row.abs_diff);
    if (!row.pass) ++report.failures;
  }
  return report;
}

void write_validation_csv(std::ostream& out, const ValidationReport& report) {
  out << "zeta,kappa,pair,closed,numeric,abs_diff,quad_err,pass,note\n";
  for (const auto& r : report.rows) {
    out << format_number(r.zeta) << ',' << format_number(r.kappa) << ",\"" << r.setting_pair
        << "\"," << format_number(r.closed) << ',' << format_number(r.numeric) << ','
        << format_number(r.abs_diff) << ',' << format_number(r.quad_err) << ','
        << (r.pass ? "pass" : "FAIL") << ",\"" << r.note << "\"\n";
  }
}

void write_validation_summary(std::ostream& out, const ValidationReport& report, double tolerance) {
  out << "validation: " << report.rows.size() << " rows, " << report.failures
      << " failures, max |numeric - closed| = " << format_number(report.max_diff)
      << " (tolerance " << format_number(tolerance) << ")\n";
}

}  // namespace bellwave
