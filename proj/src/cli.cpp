#include "rzlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rzlab/dispersion.hpp"
#include "rzlab/errors.hpp"
#include "rzlab/hadamard.hpp"
#include "rzlab/parallel.hpp"
#include "rzlab/quantum.hpp"
#include "rzlab/scattering.hpp"
#include "rzlab/zeros.hpp"

namespace rzlab::cli {

namespace {

using json = nlohmann::json;
using cplx = std::complex<double>;

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// A flat table: the CSV projection of a report.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Report {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  std::vector<std::string> diagnostics;
  Table table;
  bool verified = true;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(17) << v.get<double>();
    return s.str();
  }
  if (v.is_null()) return "nan";
  return v.dump();
}

void write_report(const Report& r, const std::string& format, bool deterministic, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < r.table.columns.size(); ++i) out << (i ? "," : "") << r.table.columns[i];
    out << '\n';
    for (const auto& row : r.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  json doc;
  doc["command"] = r.command;
  doc["version"] = kVersion;
  doc["parameters"] = r.parameters;
  doc["results"] = r.results;
  doc["diagnostics"] = r.diagnostics;
  if (!deterministic) doc["timestamp"] = utc_timestamp();
  out << doc.dump(2) << '\n';
}

// ---- zeros ---------------------------------------------------------------

struct ZerosArgs {
  double t_min = 0.0;
  double t_max = 0.0;
  double step = 0.1;
  double tol = 1e-10;
};

Report cmd_zeros(const ZerosArgs& a, int jobs) {
  Report r;
  r.command = "zeros";
  r.parameters = {{"t_min", a.t_min}, {"t_max", a.t_max}, {"step", a.step}, {"tol", a.tol}};
  const auto scan = zeros::scan_zeros(a.t_min, a.t_max, a.step, a.tol, jobs);
  json list = json::array();
  r.table.columns = {"index", "ordinate", "residual"};
  for (const auto& z : scan.zeros) {
    list.push_back({{"index", z.index}, {"ordinate", z.ordinate}, {"residual", z.residual},
                    {"log_residual", z.log_residual}});
    r.table.rows.push_back({z.index, z.ordinate, z.residual});
  }
  r.results["zeros"] = list;
  r.results["count"] = scan.zeros.size();
  r.results["rectangle_count"] = scan.rectangle_count;
  r.results["cross_check"] = scan.consistent ? "consistent" : "mismatch";
  r.diagnostics = scan.warnings;
  r.verified = scan.consistent;
  return r;
}

// ---- smatrix ---------------------------------------------------------------

Report cmd_smatrix_eval(double re, double im) {
  Report r;
  r.command = "smatrix eval";
  r.parameters = {{"re", re}, {"im", im}};
  const scattering::ComplexArgument s(re, im);
  const auto S = scattering::s_matrix(s);
  const auto F = scattering::jost_plus(s);
  r.results["s"] = complex_json(s.value());
  r.results["S"] = {{"value", complex_json(S.value.to_complex())},
                    {"log_modulus", S.value.log_modulus},
                    {"phase", S.value.phase},
                    {"pole", S.pole_flag},
                    {"zero", S.zero_flag}};
  r.results["F_plus"] = {{"value", complex_json(F.value.to_complex())},
                         {"log_modulus", F.value.log_modulus},
                         {"phase", F.value.phase},
                         {"pole", F.pole_flag},
                         {"zero", F.zero_flag}};
  r.table.columns = {"re", "im", "log_modulus", "phase", "pole", "zero"};
  r.table.rows.push_back({re, im, S.value.log_modulus, S.value.phase, S.pole_flag, S.zero_flag});
  return r;
}

Report cmd_smatrix_scan(double tau_max, double step, double tolerance) {
  if (!(step > 0.0) || !(tau_max >= 0.0)) throw PreconditionError("smatrix scan: need step > 0 and tau_max >= 0");
  Report r;
  r.command = "smatrix scan";
  r.parameters = {{"tau_max", tau_max}, {"step", step}, {"tolerance", tolerance}};
  r.table.columns = {"tau", "deviation"};
  json series = json::array();
  double worst = 0.0;
  const auto count = static_cast<std::size_t>(std::floor(tau_max / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    const double tau = static_cast<double>(i) * step;
    const double deviation = scattering::s_matrix(scattering::ComplexArgument(0.0, tau)).value.modulus() - 1.0;
    worst = std::max(worst, std::abs(deviation));
    series.push_back({{"tau", tau}, {"deviation", deviation}});
    r.table.rows.push_back({tau, deviation});
  }
  r.results["series"] = series;
  r.results["max_abs_deviation"] = worst;
  r.verified = worst < tolerance;
  r.results["verdict"] = r.verified ? "unitary" : "violation";
  return r;
}

Report cmd_smatrix_correspondence(std::size_t num_zeros, int jobs) {
  Report r;
  r.command = "smatrix correspondence";
  r.parameters = {{"num_zeros", num_zeros}};
  const auto catalog = hadamard::ZeroCatalog::first(num_zeros, jobs);
  r.table.columns = {"index", "ordinate", "re", "im", "jost_modulus", "winding", "lambda", "passed"};
  json list = json::array();
  std::size_t passes = 0;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const double t = catalog.ordinates()[i];
    const auto check = scattering::check_jost_zero(t);
    const auto lambda = scattering::coupling_at_zero(t).lambda;
    passes += check.passed ? 1 : 0;
    list.push_back({{"index", i + 1},
                    {"ordinate", t},
                    {"jost_zero", complex_json(check.point.value())},
                    {"jost_modulus", check.jost_modulus},
                    {"winding", check.winding},
                    {"lambda", complex_json(lambda)},
                    {"passed", check.passed}});
    r.table.rows.push_back({i + 1, t, check.point.sigma, check.point.t, check.jost_modulus, check.winding,
                            lambda.real(), check.passed});
  }
  r.results["zeros"] = list;
  r.results["passes"] = passes;
  r.verified = passes == catalog.size();
  if (!r.verified) r.diagnostics.push_back("correspondence failed for some zeros");
  return r;
}

// ---- quantum ---------------------------------------------------------------

Report cmd_jost_verify(double lambda, double k, double y_min, double y_max, int points, double tolerance) {
  if (points < 2 || !(y_max > y_min)) throw PreconditionError("jost-verify: need points >= 2 and y_max > y_min");
  Report r;
  r.command = "quantum jost-verify";
  const double y_start = quantum::asymptotic_start_radius(k, lambda);
  r.parameters = {{"lambda", lambda}, {"k", k},         {"y_min", y_min},
                  {"y_max", y_max},   {"points", points}, {"tolerance", tolerance}};
  std::vector<double> ys(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) ys[i] = y_min + (y_max - y_min) * i / (points - 1);
  const cplx nu = quantum::OrderParameter::from_lambda(lambda).nu;
  const auto samples = quantum::jost_solution_ode(k, lambda, y_min, y_start, ys);
  r.table.columns = {"y", "ode_re", "ode_im", "analytic_re", "analytic_im", "relative_error", "asymptotic_residual"};
  json list = json::array();
  double worst = 0.0;
  for (const auto& s : samples) {
    const cplx exact = quantum::jost_solution_analytic(k, nu, s.y);
    const double rel = std::abs(s.value - exact) / std::abs(exact);
    const double asym = quantum::asymptotic_residual(k, nu, s.y);
    worst = std::max(worst, rel);
    list.push_back({{"y", s.y}, {"ode", complex_json(s.value)}, {"analytic", complex_json(exact)},
                    {"relative_error", rel}, {"asymptotic_residual", asym}});
    r.table.rows.push_back({s.y, s.value.real(), s.value.imag(), exact.real(), exact.imag(), rel, asym});
  }
  r.results["nu"] = complex_json(nu);
  r.results["y_start"] = y_start;
  r.results["samples"] = list;
  r.results["max_relative_error"] = worst;
  r.verified = worst < tolerance;
  return r;
}

Report cmd_kmoment(double nu_re, double nu_im) {
  Report r;
  r.command = "quantum kmoment";
  r.parameters = {{"nu", complex_json({nu_re, nu_im})}};
  constexpr double kPrintedCoefficient = 0.125;
  const cplx nu(nu_re, nu_im);
  const auto integral = quantum::k_moment_integral(nu);
  const double fitted = quantum::fitted_moment_coefficient();
  const cplx closed = quantum::k_moment_closed_form(nu, fitted);
  const bool discrepancy = std::abs(fitted - kPrintedCoefficient) > 1e-6;
  r.results["integral"] = complex_json(integral.value);
  r.results["error_estimate"] = integral.error_estimate;
  r.results["evaluations"] = integral.evaluations;
  r.results["fitted_coefficient"] = fitted;
  r.results["printed_coefficient"] = kPrintedCoefficient;
  r.results["closed_form_fitted"] = complex_json(closed);
  r.results["closed_form_printed"] = complex_json(quantum::k_moment_closed_form(nu, kPrintedCoefficient));
  r.results["flag"] = discrepancy ? "discrepancy" : "agreement";
  if (discrepancy) {
    std::ostringstream msg;
    msg << "closed-form coefficient fitted by quadrature is " << fitted << ", not the printed "
        << kPrintedCoefficient;
    r.diagnostics.push_back(msg.str());
  }
  const double mismatch = std::abs(integral.value - closed);
  r.results["closed_form_mismatch"] = mismatch;
  r.verified = std::abs(fitted - 0.5) < 1e-6 && mismatch < 1e-8 * std::max(1.0, std::abs(closed));
  r.table.columns = {"nu_re", "nu_im", "integral_re", "integral_im", "fitted_coefficient", "printed_coefficient",
                     "flag"};
  r.table.rows.push_back({nu_re, nu_im, integral.value.real(), integral.value.imag(), fitted, kPrintedCoefficient,
                          r.results["flag"]});
  return r;
}

Report cmd_khuri(double lambda_re, double lambda_im, double tau) {
  Report r;
  r.command = "quantum khuri";
  const cplx lambda(lambda_re, lambda_im);
  r.parameters = {{"lambda", complex_json(lambda)}, {"tau", tau}};
  const double residual = quantum::khuri_reality_residual(lambda, tau);
  r.results["nu"] = complex_json(quantum::OrderParameter::from_lambda(lambda).nu);
  r.results["residual"] = residual;
  r.verified = lambda_im != 0.0 || residual == 0.0;
  r.table.columns = {"lambda_re", "lambda_im", "tau", "residual"};
  r.table.rows.push_back({lambda_re, lambda_im, tau, residual});
  return r;
}

// ---- hadamard / dispersion -------------------------------------------------

Report cmd_hadamard(std::size_t num_zeros, double at_re, double at_im, std::vector<std::size_t> counts, int jobs) {
  Report r;
  r.command = "hadamard";
  if (counts.empty()) {
    for (std::size_t n : {num_zeros / 10, num_zeros / 2, num_zeros}) {
      if (n > 0 && (counts.empty() || counts.back() != n)) counts.push_back(n);
    }
  }
  r.parameters = {{"num_zeros", num_zeros}, {"at", complex_json({at_re, at_im})}, {"counts", counts}};
  const auto catalog = hadamard::ZeroCatalog::first(num_zeros, jobs);
  const auto params = hadamard::fit_constants();
  const cplx z(at_re, at_im);
  const auto profile = hadamard::convergence_profile(params, catalog, z, counts);
  r.results["A"] = complex_json(params.A);
  r.results["B"] = complex_json(params.B);
  r.results["m"] = params.m;
  r.results["exp_A"] = complex_json(std::exp(params.A));
  r.table.columns = {"n", "residual"};
  json list = json::array();
  bool decreasing = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    list.push_back({{"n", counts[i]}, {"residual", profile[i]}});
    r.table.rows.push_back({counts[i], profile[i]});
    if (i > 0 && !(profile[i] < profile[i - 1])) decreasing = false;
  }
  r.results["profile"] = list;
  r.results["decreasing"] = decreasing;
  r.verified = decreasing;
  if (!decreasing) r.diagnostics.push_back("residual profile is not strictly decreasing");
  return r;
}

struct DispersionArgs {
  std::string model = "rational";
  double half_width = 50.0;
  std::size_t nodes = 4001;
  double alpha = 1.0;
  double beta = 1.001;
  std::vector<double> bound_states;
  double threshold = 1e-3;
};

Report cmd_dispersion(const DispersionArgs& a, int jobs) {
  Report r;
  r.command = "dispersion roundtrip";
  r.parameters = {{"model", a.model}, {"half_width", a.half_width}, {"nodes", a.nodes},
                  {"threshold", a.threshold}};
  double residual = 0.0;
  if (a.model == "unit") {
    const auto samples = dispersion::sample_on_grid([](double) { return cplx(1.0); }, a.half_width, a.nodes);
    residual = dispersion::roundtrip_residual(samples, dispersion::BlaschkeSpec{}, jobs);
  } else {
    r.parameters["alpha"] = a.alpha;
    r.parameters["beta"] = a.beta;
    r.parameters["bound_states"] = a.bound_states;
    const dispersion::RationalModel model{a.alpha, a.beta, dispersion::BlaschkeSpec(a.bound_states)};
    residual = dispersion::roundtrip_residual(model.sample(a.half_width, a.nodes), model.bound_states, jobs);
  }
  r.results["residual"] = residual;
  r.verified = residual < a.threshold;
  r.table.columns = {"model", "half_width", "nodes", "residual"};
  r.table.rows.push_back({a.model, a.half_width, a.nodes, residual});
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for zeta zeros, scattering and Jost functions", "rzlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "json";
  std::string out_path;
  bool deterministic = false;
  int jobs = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write the report to this file");
  app.add_flag("--deterministic", deterministic, "Omit the timestamp");
  app.add_option("--jobs", jobs, "Worker threads (default: RZLAB_JOBS or all cores)")->check(CLI::NonNegativeNumber);
  app.fallthrough();

  ZerosArgs zargs;
  auto* zeros_cmd = app.add_subcommand("zeros", "Locate zeros on the critical line and cross-check counts");
  zeros_cmd->add_option("--t-min", zargs.t_min)->required();
  zeros_cmd->add_option("--t-max", zargs.t_max)->required();
  zeros_cmd->add_option("--step", zargs.step, "Scan step")->capture_default_str();
  zeros_cmd->add_option("--tol", zargs.tol, "Refinement width")->capture_default_str();

  auto* smatrix_cmd = app.add_subcommand("smatrix", "S(s) = xi(2s)/xi(-2s) and F+ = 1/S");
  smatrix_cmd->require_subcommand(1);
  double re = 0.0;
  double im = 0.0;
  auto* eval_cmd = smatrix_cmd->add_subcommand("eval", "Evaluate S and F+ at one point");
  eval_cmd->add_option("--re", re)->required();
  eval_cmd->add_option("--im", im)->required();
  double tau_max = 50.0;
  double tau_step = 0.1;
  double unitarity_tol = 1e-8;
  auto* scan_cmd = smatrix_cmd->add_subcommand("scan", "||S(i tau)| - 1| along the imaginary axis");
  scan_cmd->add_option("--tau-max", tau_max)->capture_default_str();
  scan_cmd->add_option("--step", tau_step)->capture_default_str();
  scan_cmd->add_option("--tolerance", unitarity_tol)->capture_default_str();
  std::size_t corr_zeros = 10;
  auto* corr_cmd = smatrix_cmd->add_subcommand("correspondence", "Jost zeros at -1/4 + i t_n / 2");
  corr_cmd->add_option("--num-zeros", corr_zeros)->capture_default_str()->check(CLI::Range(1, 138));

  auto* quantum_cmd = app.add_subcommand("quantum", "Inverse-square potential checks");
  quantum_cmd->require_subcommand(1);
  double lambda = 2.0;
  double lambda_im = 0.0;
  double k = 1.0;
  double y_min = 1.0;
  double y_max = 10.0;
  int points = 19;
  double jost_tol = 1e-6;
  auto* jost_cmd = quantum_cmd->add_subcommand("jost-verify", "ODE against the Hankel Jost solution");
  jost_cmd->add_option("--lambda", lambda)->required();
  jost_cmd->add_option("--k", k)->required();
  jost_cmd->add_option("--y-min", y_min)->capture_default_str();
  jost_cmd->add_option("--y-max", y_max)->capture_default_str();
  jost_cmd->add_option("--points", points)->capture_default_str();
  jost_cmd->add_option("--tolerance", jost_tol)->capture_default_str();
  double nu_re = 0.5;
  double nu_im = 0.0;
  auto* kmoment_cmd = quantum_cmd->add_subcommand("kmoment", "Integral of y K_nu(y)^2 and its closed form");
  kmoment_cmd->add_option("--nu", nu_re)->required();
  kmoment_cmd->add_option("--nu-im", nu_im)->capture_default_str();
  double tau = 1.0;
  auto* khuri_cmd = quantum_cmd->add_subcommand("khuri", "Im(lambda) times the normalization integral");
  khuri_cmd->add_option("--lambda", lambda)->required();
  khuri_cmd->add_option("--lambda-im", lambda_im)->capture_default_str();
  khuri_cmd->add_option("--tau", tau)->capture_default_str();

  std::size_t had_zeros = 100;
  double at_re = 2.0;
  double at_im = 0.0;
  std::vector<std::size_t> counts;
  auto* hadamard_cmd = app.add_subcommand("hadamard", "Truncated Hadamard product against xi");
  hadamard_cmd->add_option("--num-zeros", had_zeros)->capture_default_str()->check(CLI::Range(1, 138));
  hadamard_cmd->add_option("--at", at_re)->capture_default_str();
  hadamard_cmd->add_option("--at-im", at_im)->capture_default_str();
  hadamard_cmd->add_option("--counts", counts, "Product lengths to report");

  DispersionArgs dargs;
  auto* dispersion_cmd = app.add_subcommand("dispersion", "Jost functions from S on the real line");
  dispersion_cmd->require_subcommand(1);
  auto* roundtrip_cmd = dispersion_cmd->add_subcommand("roundtrip", "S -> (F+, F-) -> S residual");
  roundtrip_cmd->add_option("--model", dargs.model)->capture_default_str()->check(CLI::IsMember({"unit", "rational"}));
  roundtrip_cmd->add_option("--half-width", dargs.half_width)->capture_default_str();
  roundtrip_cmd->add_option("--nodes", dargs.nodes)->capture_default_str();
  roundtrip_cmd->add_option("--alpha", dargs.alpha)->capture_default_str();
  roundtrip_cmd->add_option("--beta", dargs.beta)->capture_default_str();
  roundtrip_cmd->add_option("--bound-states", dargs.bound_states);
  roundtrip_cmd->add_option("--threshold", dargs.threshold)->capture_default_str();

  for (auto* sub : {zeros_cmd, smatrix_cmd, eval_cmd, scan_cmd, corr_cmd, quantum_cmd, jost_cmd, kmoment_cmd,
                    khuri_cmd, hadamard_cmd, dispersion_cmd, roundtrip_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    jobs = resolve_jobs(jobs);
    Report report;
    if (*zeros_cmd) {
      report = cmd_zeros(zargs, jobs);
    } else if (*eval_cmd) {
      report = cmd_smatrix_eval(re, im);
    } else if (*scan_cmd) {
      report = cmd_smatrix_scan(tau_max, tau_step, unitarity_tol);
    } else if (*corr_cmd) {
      report = cmd_smatrix_correspondence(corr_zeros, jobs);
    } else if (*jost_cmd) {
      report = cmd_jost_verify(lambda, k, y_min, y_max, points, jost_tol);
    } else if (*kmoment_cmd) {
      report = cmd_kmoment(nu_re, nu_im);
    } else if (*khuri_cmd) {
      report = cmd_khuri(lambda, lambda_im, tau);
    } else if (*hadamard_cmd) {
      report = cmd_hadamard(had_zeros, at_re, at_im, counts, jobs);
    } else if (*roundtrip_cmd) {
      report = cmd_dispersion(dargs, jobs);
    }
    report.results["verified"] = report.verified;

    if (out_path.empty()) {
      write_report(report, format, deterministic, out);
    } else {
      std::ofstream file(out_path);
      if (!file) {
        err << "rzlab: cannot open " << out_path << '\n';
        return kUsage;
      }
      write_report(report, format, deterministic, file);
    }
    for (const auto& d : report.diagnostics) err << "warning: " << d << '\n';
    return report.verified ? kSuccess : kVerificationFailure;
  } catch (const VerificationError& e) {
    err << "rzlab: verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "rzlab: " << e.what() << '\n';
    return kDomainOrRange;
  }
}

}  // namespace rzlab::cli
