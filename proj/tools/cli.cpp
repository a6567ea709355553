#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "bellwave/chsh.hpp"
#include "bellwave/sweep.hpp"
#include "bellwave/svg.hpp"

namespace bellwave::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, delim)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

UnitVector3 parse_direction(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("direction must be x,y,z: '" + text + "'");
  try {
    return UnitVector3::normalized(parse_double(parts[0]), parse_double(parts[1]),
                                   parse_double(parts[2]));
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

// "default" or a=x,y,z,a2=x,y,z,b=x,y,z,b2=x,y,z (any order)
AnalyzerSettings parse_settings(const std::string& text) {
  if (text.empty() || text == "default") return {};
  std::map<std::string, std::vector<std::string>> parts;
  std::string current;
  for (const auto& token : split(text, ',')) {
    const auto eq = token.find('=');
    if (eq != std::string::npos) {
      current = trim(token.substr(0, eq));
      parts[current].push_back(trim(token.substr(eq + 1)));
    } else if (!current.empty()) {
      parts[current].push_back(token);
    } else {
      throw UsageError("settings must look like a=x,y,z,a2=x,y,z,b=x,y,z,b2=x,y,z");
    }
  }
  AnalyzerSettings s;
  auto take = [&](const std::string& key) {
    const auto it = parts.find(key);
    if (it == parts.end() || it->second.size() != 3) {
      throw UsageError("settings entry '" + key + "' needs three components");
    }
    return parse_direction(it->second[0] + "," + it->second[1] + "," + it->second[2]);
  };
  for (const auto& [key, _] : parts) {
    if (key != "a" && key != "a2" && key != "b" && key != "b2") {
      throw UsageError("unknown settings entry '" + key + "'");
    }
  }
  s.a = take("a");
  s.a_prime = take("a2");
  s.b = take("b");
  s.b_prime = take("b2");
  return s;
}

// Flags shared by the evaluation commands.
struct Common {
  CLI::Option* zeta_opt = nullptr;
  CLI::Option* kappa_opt = nullptr;
  CLI::Option* P_opt = nullptr;
  CLI::Option* Z_opt = nullptr;
  double zeta = 0.0;
  double kappa = 0.0;
  double d = kDefaultWidth;
  double P = 0.0;
  double Z = 0.0;
  bool allow_relativistic = false;
  std::string method = "closed";
  std::string spin_mode = "leading";
  int quad_nodes = 8;
  double quad_tol = 1e-8;
  int quad_max_nodes = 128;
  std::string window = "uniform";
  double window_width = 10.0;  // units of d
  std::string format = "csv";
  std::string out_path;
  int jobs = 1;
  std::string config;
};

void add_physical(CLI::App* sub, Common& c, bool with_point) {
  if (with_point) {
    c.zeta_opt = sub->add_option("--zeta", c.zeta, "detector half-separation in units of d");
    c.kappa_opt = sub->add_option("--kappa", c.kappa, "P d (directed versus diffusive momentum)");
    c.P_opt = sub->add_option("--P", c.P, "central momentum [mc]");
    c.Z_opt = sub->add_option("--Z", c.Z, "detector half-separation [Compton lengths]");
  }
  sub->add_option("--d", c.d, "initial packet width [Compton lengths]")->capture_default_str();
  sub->add_flag("--allow-relativistic", c.allow_relativistic, "accept P >= 0.1 mc");
}

void add_numeric(CLI::App* sub, Common& c) {
  sub->add_option("--spin-mode", c.spin_mode, "leading|full")
      ->check(CLI::IsMember({"leading", "full"}))
      ->capture_default_str();
  sub->add_option("--quad-nodes", c.quad_nodes, "initial Gauss-Hermite nodes per axis")
      ->capture_default_str();
  sub->add_option("--quad-tol", c.quad_tol, "relative tolerance of node doubling")->capture_default_str();
  sub->add_option("--quad-max-nodes", c.quad_max_nodes, "largest nodes per axis")->capture_default_str();
  sub->add_option("--window", c.window, "uniform|gaussian transverse detector profile")
      ->check(CLI::IsMember({"uniform", "gaussian"}))
      ->capture_default_str();
  sub->add_option("--window-width", c.window_width, "gaussian window rms width in units of d")
      ->capture_default_str();
}

void add_output(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--out", c.out_path, "output file (default: stdout)");
  sub->add_option("--jobs", c.jobs, "worker threads (default: $BELLWAVE_JOBS or 1)")->check(CLI::PositiveNumber);
  sub->add_option("--config", c.config, "flat key = value file; flags override it");
}

NumericOptions numeric_options(const Common& c) {
  NumericOptions o;
  o.spin_mode = c.spin_mode == "full" ? SpinMode::full : SpinMode::leading;
  if (c.window == "gaussian") {
    if (!(c.window_width > 0.0)) throw UsageError("--window-width must be positive");
    o.window_a = o.window_b = DetectorWindow{WindowProfile::gaussian, c.window_width * c.d};
  }
  o.quad.nodes_per_axis = c.quad_nodes;
  o.quad.target_rel_tol = c.quad_tol;
  o.quad.max_nodes_per_axis = c.quad_max_nodes;
  if (c.quad_nodes < 8 || c.quad_nodes > c.quad_max_nodes || c.quad_max_nodes > kMaxHermiteNodes ||
      !(c.quad_tol > 0.0)) {
    throw UsageError("need 8 <= --quad-nodes <= --quad-max-nodes <= 256 and --quad-tol > 0");
  }
  return o;
}

Method parse_method(const std::string& m) {
  if (m == "closed") return Method::closed;
  if (m == "numeric") return Method::numeric;
  throw UsageError("--method must be closed or numeric");
}

bool close_rel(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1e-300, std::abs(a), std::abs(b)}); }

// Dimensionless flags take precedence; dimensional ones given alongside
// must agree with them.
PhysicalConfig resolve_config(const Common& c) {
  const bool has_zeta = c.zeta_opt && c.zeta_opt->count() > 0;
  const bool has_kappa = c.kappa_opt && c.kappa_opt->count() > 0;
  const bool has_P = c.P_opt && c.P_opt->count() > 0;
  const bool has_Z = c.Z_opt && c.Z_opt->count() > 0;
  if (!(c.d > 0.0)) throw UsageError("--d must be positive");

  double zeta = c.zeta, kappa = c.kappa;
  if (!has_kappa) {
    if (!has_P) throw UsageError("give --kappa (or --P)");
    kappa = c.P * c.d;
  } else if (has_P && !close_rel(c.P * c.d, kappa)) {
    throw UsageError("--P conflicts with --kappa at the chosen --d");
  }
  if (!has_zeta) {
    if (!has_Z) throw UsageError("give --zeta (or --Z)");
    zeta = c.Z / c.d;
  } else if (has_Z && !close_rel(c.Z / c.d, zeta)) {
    throw UsageError("--Z conflicts with --zeta at the chosen --d");
  }
  try {
    return from_dimensionless({zeta, kappa}, c.d, c.allow_relativistic);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }
  void close(const std::string& path) {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw std::runtime_error("failed writing '" + path + "'");
    }
  }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string method_name(Method m) { return m == Method::closed ? "closed" : "numeric"; }

int cmd_point(const Common& c, bool bell, const std::string& a_text, const std::string& b_text,
              const std::string& settings_text, std::ostream& out) {
  const PhysicalConfig cfg = resolve_config(c);
  const Method method = parse_method(c.method);
  const NumericOptions opts = numeric_options(c);
  const DimensionlessPoint pt = to_dimensionless(cfg);
  const BellDecomposition closed = bell_closed(pt);

  double value = 0.0, err = 0.0;
  if (bell) {
    const BellEstimate est = bell_from_correlators(pt, parse_settings(settings_text), method, opts, cfg.d);
    value = est.B;
    err = est.err;
  } else {
    const UnitVector3 a = parse_direction(a_text);
    const UnitVector3 b = parse_direction(b_text);
    const CorrelatorValue v =
        method == Method::closed ? correlator_dimensionless(a, b, pt) : correlator_numeric(a, b, cfg, opts);
    value = v.value;
    err = v.err;
  }

  Sink sink(c.out_path, out);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["zeta"] = pt.zeta;
    j["kappa"] = pt.kappa;
    j[bell ? "B" : "C"] = value;
    j["F_perp"] = closed.F_perp;
    j["Phi_par"] = closed.Phi_par;
    j["method"] = method_name(method);
    j["err"] = err;
    sink.stream() << j.dump(2) << '\n';
  } else {
    sink.stream() << "zeta,kappa," << (bell ? "B" : "C") << ",F_perp,Phi_par,method,err\n"
                  << format_number(pt.zeta) << ',' << format_number(pt.kappa) << ','
                  << format_number(value) << ',' << format_number(closed.F_perp) << ','
                  << format_number(closed.Phi_par) << ',' << method_name(method) << ','
                  << format_number(err) << '\n';
  }
  sink.close(c.out_path);
  return kExitOk;
}

SweepMethod parse_sweep_method(const std::string& m) {
  if (m == "closed") return SweepMethod::closed;
  if (m == "numeric") return SweepMethod::numeric;
  if (m == "both") return SweepMethod::both;
  throw UsageError("--method must be closed, numeric or both");
}

int write_sweep(const Common& c, const SweepRequest& req, std::ostream& out) {
  const auto rows = run_sweep(req, c.jobs);
  Sink sink(c.out_path, out);
  if (c.format == "json") {
    write_sweep_json(sink.stream(), rows, req.method);
  } else {
    write_sweep_csv(sink.stream(), rows, req.method);
  }
  sink.close(c.out_path);
  return kExitOk;
}

int cmd_chsh(const Common& c, const std::string& settings_text, bool find_crossing,
             std::ostream& out) {
  const bool has_point = (c.zeta_opt->count() > 0 || c.Z_opt->count() > 0);
  if (!has_point && !find_crossing) throw UsageError("give --zeta, --find-crossing or both");
  const AnalyzerSettings settings = parse_settings(settings_text);
  const Method method = parse_method(c.method);
  const NumericOptions opts = numeric_options(c);

  double kappa = c.kappa;
  if (c.kappa_opt->count() == 0) {
    if (c.P_opt->count() == 0) throw UsageError("give --kappa (or --P)");
    kappa = c.P * c.d;
  }
  if (!(kappa > 0.0)) throw UsageError("--kappa must be positive");

  Sink sink(c.out_path, out);
  std::ostream& os = sink.stream();
  nlohmann::ordered_json j;
  if (has_point) {
    const PhysicalConfig cfg = resolve_config(c);
    const DimensionlessPoint pt = to_dimensionless(cfg);
    const BellEstimate est = bell_from_correlators(pt, settings, method, opts, cfg.d);
    const BellDecomposition closed = bell_closed(pt);
    if (c.format == "json") {
      j["kappa"] = pt.kappa;
      j["zeta"] = pt.zeta;
      j["B"] = est.B;
      j["absB"] = std::abs(est.B);
      j["F_perp"] = closed.F_perp;
      j["Phi_par"] = closed.Phi_par;
      j["correlators"] = {est.correlators[0].value, est.correlators[1].value,
                          est.correlators[2].value, est.correlators[3].value};
      j["method"] = method_name(method);
      j["err"] = est.err;
    } else {
      os << "kappa,zeta,B,absB,F_perp,Phi_par,C_ab,C_ab2,C_a2b,C_a2b2,method,err\n"
         << format_number(pt.kappa) << ',' << format_number(pt.zeta) << ',' << format_number(est.B) << ','
         << format_number(std::abs(est.B)) << ',' << format_number(closed.F_perp) << ','
         << format_number(closed.Phi_par);
      for (const auto& cv : est.correlators) os << ',' << format_number(cv.value);
      os << ',' << method_name(method) << ',' << format_number(est.err) << '\n';
    }
  }
  if (find_crossing) {
    const CrossingScan scan = scan_classical_crossings(kappa);
    if (c.format == "json") {
      j["crossing"] = {{"kappa", kappa},
                       {"zeta_c", scan.first ? nlohmann::json(*scan.first) : nlohmann::json(nullptr)},
                       {"crossings", scan.crossings},
                       {"zeta_max", scan.zeta_max},
                       {"abs_B_infinity", bell_limit_infinity(kappa)}};
    } else {
      if (has_point) os << '\n';
      os << "kappa,zeta_c,n_crossings,crossings,abs_B_infinity\n"
         << format_number(kappa) << ',' << (scan.first ? format_number(*scan.first) : "none") << ','
         << scan.crossings.size() << ",\"";
      for (std::size_t i = 0; i < scan.crossings.size(); ++i) {
        os << (i ? ";" : "") << format_number(scan.crossings[i]);
      }
      os << "\"," << format_number(bell_limit_infinity(kappa)) << '\n';
    }
  }
  if (c.format == "json") os << j.dump(2) << '\n';
  sink.close(c.out_path);
  return kExitOk;
}

int cmd_validate(const Common& c, const std::vector<double>& kappas, const std::vector<double>& zetas,
                 double tolerance, std::ostream& out, std::ostream& err) {
  ValidationRequest req;
  if (!kappas.empty()) req.kappa_list = kappas;
  if (!zetas.empty()) req.zeta_list = zetas;
  req.numeric = numeric_options(c);
  req.d = c.d;
  req.tolerance = tolerance;
  for (double k : req.kappa_list)
    if (!(k > 0.0)) throw UsageError("--kappa values must be positive");
  for (double z : req.zeta_list)
    if (!(z >= 0.0)) throw UsageError("--zeta values must be non-negative");
  try {
    for (double k : req.kappa_list) from_dimensionless({0.0, k}, req.d, c.allow_relativistic);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }

  const ValidationReport report = run_validation(req, c.jobs);
  Sink sink(c.out_path, out);
  if (c.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"zeta", r.zeta}, {"kappa", r.kappa}, {"pair", r.setting_pair},
                      {"closed", r.closed}, {"numeric", r.numeric}, {"abs_diff", r.abs_diff},
                      {"quad_err", r.quad_err}, {"pass", r.pass}, {"note", r.note}});
    }
    nlohmann::ordered_json j;
    j["rows"] = rows;
    j["summary"] = {{"max_diff", report.max_diff}, {"failures", report.failures},
                    {"tolerance", tolerance}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    write_validation_csv(sink.stream(), report);
  }
  sink.close(c.out_path);
  write_validation_summary(c.out_path.empty() ? err : out, report, tolerance);
  return report.failures == 0 ? kExitOk : kExitFailure;
}

int cmd_figure1(const Common& c, const std::vector<double>& kappas, int count, double zeta_max,
                const std::string& csv_path, const std::string& svg_path, std::ostream& out) {
  SweepRequest req;
  if (!kappas.empty()) req.kappa_list = kappas;
  req.zeta_grid = {0.0, zeta_max, count, Spacing::linear};
  try {
    req.validate();
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  const auto rows = run_sweep(req, c.jobs);

  {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open output file '" + csv_path + "'");
    write_sweep_csv(csv, rows, SweepMethod::closed);
    if (!csv) throw std::runtime_error("failed writing '" + csv_path + "'");
  }

  static const char* kColors[] = {"#00bcd4", "#ff8c00", "#2e7d32", "#8e24aa", "#6d4c41"};
  PlotSpec plot;
  plot.title = "Transitional Bell parameter";
  plot.x_label = "zeta = Z / d";
  plot.y_label = "|B(zeta; kappa)|";
  plot.x_min = 0.0;
  plot.x_max = zeta_max;
  plot.y_min = 1.0;
  plot.y_max = 3.0;
  for (std::size_t k = 0; k < req.kappa_list.size(); ++k) {
    PlotSeries s;
    s.label = "kappa = " + format_number(req.kappa_list[k]);
    s.color = kColors[k % 5];
    for (const auto& r : rows)
      if (r.kappa == req.kappa_list[k]) s.points.emplace_back(r.zeta, r.absB);
    plot.series.push_back(std::move(s));
  }
  plot.references.push_back({"quantum bound 2 sqrt(2)", "blue", 2.0 * std::numbers::sqrt2});
  plot.references.push_back({"classical limit 2", "red", 2.0});
  {
    std::ofstream svg(svg_path);
    if (!svg) throw std::runtime_error("cannot open output file '" + svg_path + "'");
    svg << render_svg(plot);
    if (!svg) throw std::runtime_error("failed writing '" + svg_path + "'");
  }
  out << "wrote " << csv_path << " (" << rows.size() << " rows) and " << svg_path << '\n';
  return kExitOk;
}

bool is_flag_key(const std::string& key) {
  return key == "allow_relativistic" || key == "bell" || key == "find_crossing";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string value = trim(t.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    entries.emplace_back(trim(t.substr(0, eq)), value);
  }
  return entries;
}

std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::vector<std::pair<std::string, std::string>>& entries) {
  if (args.size() < 2) return args;
  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) {
    std::string flag = "--" + key;
    std::replace(flag.begin() + 2, flag.end(), '_', '-');
    if (given(flag)) continue;
    if (is_flag_key(key)) {
      if (value == "true" || value == "1" || value == "yes") injected.push_back(flag);
      continue;
    }
    injected.push_back(flag);
    injected.push_back(value);
  }
  std::vector<std::string> merged(args.begin(), args.begin() + 2);
  merged.insert(merged.end(), injected.begin(), injected.end());
  merged.insert(merged.end(), args.begin() + 2, args.end());
  return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  try {
    // --config is resolved before parsing so that explicit flags win.
    for (std::size_t i = 1; i < raw_args.size(); ++i) {
      std::string path;
      if (raw_args[i] == "--config" && i + 1 < raw_args.size()) path = raw_args[i + 1];
      if (raw_args[i].rfind("--config=", 0) == 0) path = raw_args[i].substr(9);
      if (!path.empty()) args = merge_config(raw_args, read_config(path));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Bell-CHSH correlations of entangled Dirac wavepackets with planar detectors", "bellwave"};
  app.require_subcommand(1);

  // One option block per subcommand: the option pointers must not alias.
  Common point_c, sweep_c, chsh_c, validate_c, figure_c;
  if (const char* env = std::getenv("BELLWAVE_JOBS"); env && *env) {
    int jobs = 0;
    const auto [end, ec] = std::from_chars(env, env + std::strlen(env), jobs);
    if (ec != std::errc() || *end != '\0' || jobs < 1) {
      err << "error: BELLWAVE_JOBS must be a positive integer, got '" << env << "'\n";
      return kExitUsage;
    }
    for (Common* c : {&point_c, &sweep_c, &chsh_c, &validate_c, &figure_c}) c->jobs = jobs;
  }
  bool bell = false;
  bool find_crossing = false;
  std::string a_text = "0,0,1", b_text = "0,0,1", settings_text = "default";
  std::vector<double> kappa_list;
  std::vector<double> zeta_list;
  double zeta_min = 0.0, zeta_max = 5.0;
  int zeta_count = 501;
  std::string spacing = "linear";
  double tolerance = 1e-6;
  std::string csv_path = "figure1.csv", svg_path = "figure1.svg";

  auto* point = app.add_subcommand("point", "evaluate one correlator or the CHSH parameter");
  add_physical(point, point_c, true);
  add_numeric(point, point_c);
  add_output(point, point_c);
  point->add_option("--method", point_c.method, "closed|numeric")->check(CLI::IsMember({"closed", "numeric"}))->capture_default_str();
  point->add_option("--a", a_text, "analyzer direction for particle 1 (x,y,z)")->capture_default_str();
  point->add_option("--b", b_text, "analyzer direction for particle 2 (x,y,z)")->capture_default_str();
  point->add_flag("--bell", bell, "report the CHSH parameter instead of C(a,b)");
  point->add_option("--settings", settings_text, "default or a=..,a2=..,b=..,b2=.. (with --bell)");

  auto* sweep = app.add_subcommand("sweep", "tabulate B over a zeta grid for several kappa");
  add_physical(sweep, sweep_c, false);
  add_numeric(sweep, sweep_c);
  add_output(sweep, sweep_c);
  sweep->add_option("--method", sweep_c.method, "closed|numeric|both")->check(CLI::IsMember({"closed", "numeric", "both"}))->capture_default_str();
  sweep->add_option("--kappa", kappa_list, "comma-separated kappa values")->delimiter(',')->required();
  sweep->add_option("--zeta-min", zeta_min, "first grid point")->capture_default_str();
  sweep->add_option("--zeta-max", zeta_max, "last grid point")->capture_default_str();
  sweep->add_option("--zeta-count", zeta_count, "number of grid points")->capture_default_str();
  sweep->add_option("--spacing", spacing, "linear|log")->check(CLI::IsMember({"linear", "log"}))->capture_default_str();
  sweep->add_option("--settings", settings_text, "default or a=..,a2=..,b=..,b2=..");

  auto* chsh = app.add_subcommand("chsh", "CHSH parameter, its decomposition and the classical crossing");
  add_physical(chsh, chsh_c, true);
  add_numeric(chsh, chsh_c);
  add_output(chsh, chsh_c);
  chsh->add_option("--method", chsh_c.method, "closed|numeric")->check(CLI::IsMember({"closed", "numeric"}))->capture_default_str();
  chsh->add_option("--settings", settings_text, "default or a=..,a2=..,b=..,b2=..")->capture_default_str();
  chsh->add_flag("--find-crossing", find_crossing, "locate zeta where |B| first reaches 2");

  auto* validate_cmd = app.add_subcommand("validate", "quadrature correlator versus closed form");
  add_physical(validate_cmd, validate_c, false);
  add_numeric(validate_cmd, validate_c);
  add_output(validate_cmd, validate_c);
  validate_cmd->add_option("--kappa", kappa_list, "comma-separated kappa values (default 0.5,1)")->delimiter(',');
  validate_cmd->add_option("--zeta", zeta_list, "comma-separated zeta values (default 0,0.25,0.5,1,2)")->delimiter(',');
  validate_cmd->add_option("--tol", tolerance, "pass threshold on |numeric - closed|")->capture_default_str();

  auto* figure = app.add_subcommand("figure1", "|B(zeta)| curves as CSV plus an SVG plot");
  add_output(figure, figure_c);
  figure->add_option("--kappa", kappa_list, "comma-separated kappa values (default 0.5,1)")->delimiter(',');
  figure->add_option("--zeta-max", zeta_max, "largest zeta")->capture_default_str();
  figure->add_option("--zeta-count", zeta_count, "points per curve")->capture_default_str();
  figure->add_option("--csv", csv_path, "CSV output path")->capture_default_str();
  figure->add_option("--svg", svg_path, "SVG output path")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (point->parsed()) return cmd_point(point_c, bell, a_text, b_text, settings_text, out);
    if (chsh->parsed()) return cmd_chsh(chsh_c, settings_text, find_crossing, out);
    if (validate_cmd->parsed()) return cmd_validate(validate_c, kappa_list, zeta_list, tolerance, out, err);
    if (figure->parsed()) return cmd_figure1(figure_c, kappa_list, zeta_count, zeta_max, csv_path, svg_path, out);
    if (sweep->parsed()) {
      const Common& c = sweep_c;
      SweepRequest req;
      req.kappa_list = kappa_list;
      req.zeta_grid = {zeta_min, zeta_max, zeta_count, spacing == "log" ? Spacing::log : Spacing::linear};
      req.method = parse_sweep_method(c.method);
      req.settings = parse_settings(settings_text);
      req.numeric = numeric_options(c);
      req.d = c.d;
      try {
        req.validate();
        for (double k : req.kappa_list) from_dimensionless({0.0, k}, req.d, c.allow_relativistic);
      } catch (const ValidationError& e) {
        throw UsageError(e.what());
      }
      return write_sweep(c, req, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bellwave::cli
