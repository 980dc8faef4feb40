// Command-line front end: spectrum listings, density curves, entropy reports,
// golden-table regeneration and entropic-uncertainty audits.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "darboux/darboux.hpp"
#include "darboux/tables.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitGoldenDiff = 3;

struct CommonOpts {
  double lambda = 0.0;
  double omega = 1.0;
  double hbar = 1.0;
  int dim = 1;
  int n = 0;
  int l = 0;
  int m = 0;
  int n_max = -1;
  std::string space = "position";
  std::string grid_spec;
  std::string format = "csv";
  std::optional<double> tol;
  std::string output;
};

void add_model_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--dim", o.dim, "Spatial dimension N")->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", o.lambda, "Deformation / curvature parameter");
  cmd->add_option("--omega", o.omega, "Oscillator frequency");
  cmd->add_option("--hbar", o.hbar, "Reduced Planck constant");
  cmd->add_option("--tol", o.tol, "Quadrature relative tolerance override");
}

void add_state_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "Radial / principal quantum number");
  cmd->add_option("--l", o.l, "Angular quantum number (dim >= 2)");
  cmd->add_option("--m", o.m, "Magnetic quantum number (dim = 3)");
}

darboux::ModelParams make_params(const CommonOpts& o) {
  darboux::ModelParams p{o.lambda, o.omega, o.hbar, o.dim};
  p.validate();
  return p;
}

darboux::QuantumNumbers make_state(const CommonOpts& o, int n) {
  if (o.dim == 1) return darboux::QuantumNumbers::d1(n);
  if (o.dim == 3) return darboux::QuantumNumbers::d3(n, o.l, o.m);
  darboux::QuantumNumbers q{n, o.l, std::vector<int>(o.dim - 1, 0)};
  if (!q.mu_chain.empty()) q.mu_chain.front() = o.l;
  return q;
}

double default_tol() {
  if (const char* env = std::getenv("DARBOUX_QUAD_TOL")) {
    const double v = std::atof(env);
    if (v > 0.0) return v;
  }
  return 0.0;
}

darboux::QuadratureSpec make_quad_spec(const CommonOpts& o) {
  darboux::QuadratureSpec spec;
  double tol = o.tol.value_or(default_tol());
  if (tol > 0.0) {
    spec.rel_tol = tol;
    spec.abs_tol = std::min(spec.abs_tol, tol);
  }
  return spec;
}

darboux::TransformSpec make_transform_spec(const CommonOpts& o) {
  darboux::TransformSpec tspec;
  tspec.quad = make_quad_spec(o);
  return tspec;
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
      count < 1 || (count > 1 && !(hi > lo)))
    throw CLI::ValidationError("--grid", "expected min:max:count");
  std::vector<double> grid;
  grid.reserve(count);
  if (count == 1) return {lo};
  for (int i = 0; i < count; ++i)
    grid.push_back(lo + (hi - lo) * i / (count - 1));
  return grid;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json params_json(const darboux::ModelParams& p) {
  return {{"lambda", p.lambda}, {"omega", p.omega}, {"hbar", p.hbar}, {"dim", p.dim}};
}

json report_json(const darboux::EntropyReport& r) {
  json breakdown = json::object();
  for (const auto& [name, v] : r.breakdown) breakdown[name] = v;
  return {{"value", r.value}, {"err_est", r.err_est}, {"breakdown", breakdown}};
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_spectrum(const CommonOpts& o) {
  const auto params = make_params(o);
  const int n_max = (o.n_max >= 0) ? o.n_max : o.n;
  if (n_max > darboux::kMaxPolyDegree)
    throw CLI::ValidationError("--n-max", "exceeds the maximum supported degree");
  Output out(o.output);
  if (o.format == "json") {
    json rows = json::array();
    for (int n = 0; n <= n_max; ++n) {
      const auto q = make_state(o, n);
      rows.push_back({{"n", n},
                      {"l", o.dim == 1 ? 0 : o.l},
                      {"energy", darboux::energy(params, q)},
                      {"frequency", darboux::frequency(params, q)}});
    }
    out.stream() << json{{"params", params_json(params)}, {"spectrum", rows}}.dump(2)
                 << "\n";
  } else {
    out.stream() << "lambda,n,l,energy,frequency\n";
    for (int n = 0; n <= n_max; ++n) {
      const auto q = make_state(o, n);
      out.stream() << fmt_full(params.lambda) << ',' << n << ','
                   << (o.dim == 1 ? 0 : o.l) << ','
                   << fmt_full(darboux::energy(params, q)) << ','
                   << fmt_full(darboux::frequency(params, q)) << "\n";
    }
  }
  return 0;
}

int cmd_density(const CommonOpts& o) {
  const auto params = make_params(o);
  if (o.space == "momentum" && o.dim != 1 && o.dim != 3)
    throw CLI::ValidationError(
        "--space", "momentum curves are available for dim 1 and 3 only");
  const auto q = make_state(o, o.n);
  const auto grid = parse_grid(o.grid_spec.empty() ? "0:8:81" : o.grid_spec);
  const auto curve =
      darboux::sample_density(params, q, o.space, grid, make_transform_spec(o));
  Output out(o.output);
  if (o.format == "json") {
    json meta = params_json(params);
    meta["n"] = q.n;
    meta["l"] = q.l;
    meta["space"] = o.space;
    out.stream() << json{{"meta", meta},
                         {"abscissae", curve.abscissae},
                         {"values", curve.values}}
                        .dump(2)
                 << "\n";
  } else {
    out.stream() << "abscissa,value\n";
    for (size_t i = 0; i < curve.abscissae.size(); ++i)
      out.stream() << fmt_full(curve.abscissae[i]) << ','
                   << fmt_full(curve.values[i]) << "\n";
  }
  return 0;
}

int cmd_entropy(const CommonOpts& o) {
  const auto params = make_params(o);
  const auto q = make_state(o, o.n);
  const auto spec = make_quad_spec(o);
  const auto tspec = make_transform_spec(o);

  std::vector<std::pair<std::string, darboux::EntropyReport>> reports;
  auto position = [&] {
    return params.dim == 1 ? darboux::entropy_position_1d(params, q.n, spec)
                           : darboux::entropy_position_nd(params, q, spec);
  };
  auto momentum = [&] {
    if (params.dim == 1) return darboux::entropy_momentum_1d(params, q.n, tspec);
    if (params.dim == 3)
      return darboux::entropy_momentum_3d(params, q.n, q.l, q.mu_chain, tspec);
    throw CLI::ValidationError("--space",
                               "momentum entropies are available for dim 1 and 3 only");
  };
  if (o.space == "position" || o.space == "both")
    reports.emplace_back("position", position());
  if (o.space == "momentum" || o.space == "both")
    reports.emplace_back("momentum", momentum());
  if (reports.empty())
    throw CLI::ValidationError("--space", "expected position, momentum or both");

  Output out(o.output);
  if (o.format == "json") {
    json body = {{"params", params_json(params)}, {"n", q.n}, {"l", q.l}};
    for (const auto& [name, r] : reports) body[name] = report_json(r);
    out.stream() << body.dump(2) << "\n";
  } else {
    out.stream() << "space,value,err_est\n";
    for (const auto& [name, r] : reports)
      out.stream() << name << ',' << fmt_full(r.value) << ','
                   << fmt_full(r.err_est) << "\n";
  }
  return 0;
}

int cmd_check_uncertainty(const CommonOpts& o) {
  const auto params = make_params(o);
  const auto spec = make_quad_spec(o);
  const auto tspec = make_transform_spec(o);
  const int n_max = (o.n_max >= 0) ? o.n_max : o.n;

  Output out(o.output);
  bool violated = false;
  json rows = json::array();
  if (o.format != "json")
    out.stream() << "n,l,s_rho,s_gamma,total,bbm_bound,margin,err_est,saturated\n";
  for (int n = (o.n_max >= 0 ? 0 : o.n); n <= n_max; ++n) {
    const auto q = make_state(o, n);
    const auto u = darboux::uncertainty_check(params, q, spec, tspec);
    if (u.margin < -u.err_est) violated = true;
    if (o.format == "json") {
      rows.push_back({{"n", n},
                      {"l", q.l},
                      {"s_rho", u.s_rho},
                      {"s_gamma", u.s_gamma},
                      {"total", u.total},
                      {"bbm_bound", u.bbm_bound},
                      {"margin", u.margin},
                      {"err_est", u.err_est},
                      {"saturated", u.saturated}});
    } else {
      out.stream() << n << ',' << q.l << ',' << fmt_full(u.s_rho) << ','
                   << fmt_full(u.s_gamma) << ',' << fmt_full(u.total) << ','
                   << fmt_full(u.bbm_bound) << ',' << fmt_full(u.margin) << ','
                   << fmt_full(u.err_est) << ',' << (u.saturated ? 1 : 0)
                   << "\n";
    }
  }
  if (o.format == "json")
    out.stream() << json{{"params", params_json(params)}, {"states", rows}}.dump(2)
                 << "\n";
  return violated ? kExitConvergence : 0;
}

struct TablesOpts {
  std::vector<int> ids;
  std::string golden_dir = DARBOUX_GOLDEN_DIR;
  std::string out_dir = ".";
  std::optional<double> tol;
};

void write_table_csv(const std::string& path, const darboux::TableSheet& sheet,
                     const darboux::TableGrid& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "lambda";
  for (int n = 0; n < sheet.n_count; ++n) out << ',' << n;
  out << "\n";
  for (size_t i = 0; i < grid.lambdas.size(); ++i) {
    out << fmt_full(grid.lambdas[i]);
    for (double v : grid.values[i]) out << ',' << fmt_full(v);
    out << "\n";
  }
}

int cmd_tables(const TablesOpts& o) {
  bool any_failure = false;
  for (int id : o.ids) {
    for (const auto& sheet : darboux::table_sheets(id)) {
      const auto computed = darboux::compute_table(sheet);
      const auto golden =
          darboux::load_golden_table(o.golden_dir + "/" + sheet.golden_file);
      const auto diff = darboux::diff_tables(sheet, computed, golden);
      write_table_csv(o.out_dir + "/" + sheet.name + ".csv", sheet, computed);

      std::printf("%-18s max |delta| = %.3e  (tolerance %.1e)  %s\n",
                  sheet.name.c_str(), diff.max_deviation, sheet.tolerance,
                  diff.offenders.empty() ? "OK" : "FAIL");
      for (const auto& cell : diff.offenders) {
        std::printf("  lambda=%.4g n=%d computed=%.4f golden=%.4f |delta|=%.3e\n",
                    cell.lambda, cell.n, cell.computed, cell.golden,
                    cell.deviation);
        any_failure = true;
      }
    }
  }
  return any_failure ? kExitGoldenDiff : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum, eigenstates and Shannon entropies of the "
               "N-dimensional nonlinear (curved-space) oscillator"};
  app.require_subcommand(1);

  CommonOpts o;
  TablesOpts to;

  auto* spectrum = app.add_subcommand("spectrum", "List energies and frequencies");
  add_model_flags(spectrum, o);
  spectrum->add_option("--l", o.l, "Angular quantum number");
  spectrum->add_option("--n-max", o.n_max, "Largest n to list");
  spectrum->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--output", o.output, "Output path (default stdout)");

  auto* density = app.add_subcommand("density", "Sample a probability density curve");
  add_model_flags(density, o);
  add_state_flags(density, o);
  density->add_option("--space", o.space, "position or momentum")
      ->check(CLI::IsMember({"position", "momentum"}));
  density->add_option("--grid", o.grid_spec, "min:max:count");
  density->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  density->add_option("--output", o.output, "Output path (default stdout)");

  auto* entropy = app.add_subcommand("entropy", "Shannon entropy of one state");
  add_model_flags(entropy, o);
  add_state_flags(entropy, o);
  entropy->add_option("--space", o.space, "position, momentum or both")
      ->check(CLI::IsMember({"position", "momentum", "both"}));
  entropy->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  entropy->add_option("--output", o.output, "Output path (default stdout)");

  auto* check = app.add_subcommand("check-uncertainty",
                                   "Audit the entropic uncertainty bound");
  add_model_flags(check, o);
  add_state_flags(check, o);
  check->add_option("--n-max", o.n_max, "Audit states n = 0..n-max");
  check->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  check->add_option("--output", o.output, "Output path (default stdout)");

  auto* tables = app.add_subcommand("tables",
                                    "Regenerate reference tables and diff "
                                    "against golden values");
  tables->add_option("--ids", to.ids, "Table ids (1..8)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1, 8));
  tables->add_option("--golden-dir", to.golden_dir, "Golden CSV directory");
  tables->add_option("--output", to.out_dir, "Directory for regenerated CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (density->parsed()) return cmd_density(o);
    if (entropy->parsed()) return cmd_entropy(o);
    if (check->parsed()) return cmd_check_uncertainty(o);
    if (tables->parsed()) return cmd_tables(to);
  } catch (const darboux::ConvergenceError& e) {
    std::cerr << "numerical convergence failure: " << e.what()
              << " (best estimate " << e.best_value << ", err " << e.err_est
              << ")\n";
    return kExitConvergence;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  }
  return kExitUsage;
}
