// Command line front end: run benchmark cases, compare schemes against
// explicit baselines, validate the vehicle-string reference solution, and
// measure scalar convergence orders.  All trajectory output is CSV.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riccati/baselines.hpp"
#include "riccati/cases.hpp"
#include "riccati/csv.hpp"
#include "riccati/scalar.hpp"
#include "riccati/scheme.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 2;
constexpr int kExitMaxSteps = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDataFile = 66;

struct RunConfig {
  std::string case_name;
  std::string scheme = "homographic";
  double dt = 0.01;
  std::string mu = "auto";
  std::optional<double> t_end;
  bool steady = false;
  double tol = 1e-12;
  std::size_t max_steps = 200000;
  std::string out;

  // case parameter overrides
  double alpha = 0.01;
  double omega2 = 250.0;
  double delta = 0.0;
  double b = 1.0;
  std::size_t modes = 5;
  double c = 1.0;
  double length = 1.0;
  double beta = 10.0;
  double wave_alpha = 1.0;
};

void apply_json_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw riccati::DomainError("config file not found: " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("case")) cfg.case_name = j["case"].get<std::string>();
  if (j.contains("scheme")) cfg.scheme = j["scheme"].get<std::string>();
  if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
  if (j.contains("mu")) {
    if (j["mu"].is_string())
      cfg.mu = j["mu"].get<std::string>();
    else
      cfg.mu = riccati::format_double(j["mu"].get<double>());
  }
  if (j.contains("t_end")) cfg.t_end = j["t_end"].get<double>();
  if (j.contains("steady")) cfg.steady = j["steady"].get<bool>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("max_steps")) cfg.max_steps = j["max_steps"].get<std::size_t>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("omega2")) cfg.omega2 = j["omega2"].get<double>();
  if (j.contains("delta")) cfg.delta = j["delta"].get<double>();
  if (j.contains("b")) cfg.b = j["b"].get<double>();
  if (j.contains("modes")) cfg.modes = j["modes"].get<std::size_t>();
  if (j.contains("c")) cfg.c = j["c"].get<double>();
  if (j.contains("length")) cfg.length = j["length"].get<double>();
  if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
  if (j.contains("wave_alpha")) cfg.wave_alpha = j["wave_alpha"].get<double>();
}

riccati::CaseSpec build_case(const RunConfig& cfg) {
  if (cfg.case_name == "square-root") return riccati::square_root_case();
  if (cfg.case_name == "oscillator")
    return riccati::oscillator_case(cfg.alpha, cfg.omega2, cfg.delta, cfg.b);
  if (cfg.case_name == "vehicles") return riccati::vehicles_case();
  if (cfg.case_name == "wave")
    return riccati::wave_case(cfg.modes, cfg.c, cfg.length, cfg.wave_alpha, cfg.beta);
  throw riccati::DomainError("unknown case '" + cfg.case_name +
                             "' (expected square-root, oscillator, vehicles or wave)");
}

double resolve_mu(const RunConfig& cfg, const riccati::Matrix& a) {
  if (cfg.mu == "auto") {
    const riccati::MuSelection sel = riccati::select_mu(a);
    return sel.mu;
  }
  double mu = 0.0;
  try {
    mu = std::stod(cfg.mu);
  } catch (const std::exception&) {
    throw riccati::DomainError("--mu expects a number or 'auto'");
  }
  if (!(mu > 0.0)) throw riccati::DomainError("--mu must be positive");
  if (!riccati::shift_condition_holds(a, mu))
    std::cerr << "warning: mu = " << mu
              << " does not dominate lambda_max(A + A^T); the scheme stays "
                 "positive but loses its monotonicity guarantees\n";
  return mu;
}

void emit_csv(const RunConfig& cfg, const riccati::Trajectory& traj, std::size_t dim) {
  if (cfg.out.empty() || cfg.out == "-") {
    riccati::write_trajectory_csv(std::cout, traj, dim);
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw riccati::DomainError("cannot open output file: " + cfg.out);
  riccati::write_trajectory_csv(out, traj, dim);
}

int cmd_run(const RunConfig& cfg) {
  if (cfg.steady && cfg.t_end)
    throw riccati::DomainError("choose exactly one of --t-end and --steady");
  const riccati::CaseSpec spec = build_case(cfg);
  const std::size_t n = spec.problem.dim();

  if (cfg.scheme == "homographic") {
    riccati::SchemeParams params{cfg.dt, resolve_mu(cfg, spec.problem.A), cfg.tol,
                                 cfg.max_steps};
    if (cfg.steady) {
      const riccati::SteadyResult res =
          riccati::solve_steady(spec.problem, params, spec.name);
      emit_csv(cfg, res.trajectory, n);
      std::cerr << spec.name << ": " << to_string(res.trajectory.status) << " after "
                << (res.trajectory.records.empty() ? 0 : res.trajectory.records.size() - 1)
                << " steps, are_residual = "
                << riccati::are_residual(spec.problem, res.X_inf) << "\n";
      return res.converged ? kExitOk : kExitMaxSteps;
    }
    const riccati::Trajectory traj =
        riccati::integrate(spec.problem, params, cfg.t_end.value_or(10.0), spec.name);
    emit_csv(cfg, traj, n);
    return kExitOk;
  }

  riccati::ExplicitScheme scheme;
  if (cfg.scheme == "euler")
    scheme = riccati::ExplicitScheme::forward_euler;
  else if (cfg.scheme == "rk2")
    scheme = riccati::ExplicitScheme::rk2_midpoint;
  else
    throw riccati::DomainError("unknown scheme '" + cfg.scheme +
                               "' (expected homographic, euler or rk2)");
  if (cfg.steady)
    throw riccati::DomainError("--steady requires the homographic scheme");
  const double t_end = cfg.t_end.value_or(10.0);
  const auto steps = static_cast<std::size_t>(std::floor(t_end / cfg.dt * (1.0 + 1e-12)));
  const riccati::Trajectory traj =
      riccati::explicit_integrate(scheme, spec.problem, cfg.dt, steps, spec.name);
  emit_csv(cfg, traj, n);
  if (traj.status == riccati::RunStatus::diverged) {
    std::cerr << spec.name << ": " << cfg.scheme << " diverged after "
              << traj.records.size() << " recorded states\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg) {
  const riccati::CaseSpec spec = build_case(cfg);
  const double t_end = cfg.t_end.value_or(10.0);
  const auto steps = static_cast<std::size_t>(std::floor(t_end / cfg.dt * (1.0 + 1e-12)));

  riccati::SchemeParams params{cfg.dt, resolve_mu(cfg, spec.problem.A), cfg.tol,
                               cfg.max_steps};
  const riccati::Trajectory homographic =
      riccati::integrate(spec.problem, params, t_end, spec.name);
  const riccati::Trajectory euler = riccati::explicit_integrate(
      riccati::ExplicitScheme::forward_euler, spec.problem, cfg.dt, steps, spec.name);
  const riccati::Trajectory rk2 = riccati::explicit_integrate(
      riccati::ExplicitScheme::rk2_midpoint, spec.problem, cfg.dt, steps, spec.name);

  auto write = [&](std::ostream& out) {
    riccati::write_comparison_csv(out, {"homographic", "euler", "rk2"},
                                  {&homographic, &euler, &rk2});
  };
  if (cfg.out.empty() || cfg.out == "-") {
    write(std::cout);
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw riccati::DomainError("cannot open output file: " + cfg.out);
    write(out);
  }
  for (const auto* traj : {&euler, &rk2})
    if (traj->status == riccati::RunStatus::diverged)
      std::cerr << spec.name << ": "
                << (traj == &euler ? "euler" : "rk2") << " diverged after "
                << traj->records.size() << " recorded states\n";
  if (homographic.records.back().min_eig <
      -1e-9 * (1.0 + riccati::frobenius_norm(homographic.records.back().X)))
    return kExitNumerical;
  return kExitOk;
}

int cmd_validate_reference(const std::string& data_dir, double mu, double dt) {
  const riccati::Matrix a = riccati::vehicle_dynamics();
  const riccati::ReferenceValidation validation =
      riccati::validate_vehicle_reference(a, data_dir);
  std::cout << "reference ARE residual (relative): "
            << riccati::format_double(validation.residual) << "\n";
  std::cout << "candidate dynamics accepted: " << (validation.accepted ? "yes" : "no")
            << "\n";

  const riccati::SymMatrix x_ref = riccati::load_vehicle_reference(data_dir);
  const riccati::CaseSpec spec = riccati::vehicles_case(a);
  riccati::SchemeParams params{dt, mu, 1e-12, 200000};
  const riccati::SteadyResult res =
      riccati::solve_steady(spec.problem, params, spec.name, /*record=*/false);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i; j < 9; ++j)
      max_dev = std::max(max_dev, std::abs(res.X_inf(i, j) - x_ref(i, j)));
  std::cout << "solve_steady vs reference, max entrywise deviation: "
            << riccati::format_double(max_dev) << "\n";

  return (validation.accepted && res.converged && max_dev <= 5e-7) ? kExitOk : 1;
}

int cmd_scalar_order(double k, double a, double q, double d,
                     const std::vector<double>& dt_list, double t_end) {
  const riccati::ScalarProblem problem{k, a, q, d};
  const riccati::OrderStudy study = riccati::order_study(problem, dt_list, t_end, d);
  std::cout << "dt,max_error\n";
  for (std::size_t i = 0; i < study.dts.size(); ++i)
    std::cout << riccati::format_double(study.dts[i]) << ','
              << riccati::format_double(study.max_errors[i]) << "\n";
  std::cout << "slope: " << riccati::format_double(study.slope) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicit homographic (harmonic) scheme for Riccati differential equations"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  // pre-scan for --config so that command line flags override file values
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];

  try {
    if (!config_path.empty()) apply_json_config(config_path, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override it)");
    sub->add_option("--case", cfg.case_name, "square-root | oscillator | vehicles | wave");
    sub->add_option("--dt", cfg.dt, "time step");
    sub->add_option("--mu", cfg.mu, "shift parameter (number or 'auto')");
    sub->add_option("--t-end", [&cfg](const std::vector<std::string>& v) {
      cfg.t_end = std::stod(v.front());
      return true;
    }, "integration horizon");
    sub->add_flag("--steady", cfg.steady, "iterate to steady state instead of a horizon");
    sub->add_option("--tol", cfg.tol, "steady-state stopping tolerance");
    sub->add_option("--max-steps", cfg.max_steps, "steady-state iteration cap");
    sub->add_option("--out", cfg.out, "CSV output path (default stdout)");
    sub->add_option("--alpha", cfg.alpha, "oscillator control weight");
    sub->add_option("--omega2", cfg.omega2, "oscillator squared frequency");
    sub->add_option("--delta", cfg.delta, "oscillator damping");
    sub->add_option("--b", cfg.b, "oscillator input gain");
    sub->add_option("--modes", cfg.modes, "wave: number of sine modes");
    sub->add_option("--c", cfg.c, "wave: propagation speed");
    sub->add_option("--length", cfg.length, "wave: domain length");
    sub->add_option("--beta", cfg.beta, "wave: state weight");
    sub->add_option("--wave-alpha", cfg.wave_alpha, "wave: control weight");
  };

  CLI::App* run = app.add_subcommand("run", "integrate a case and emit a trajectory CSV");
  add_common(run);
  run->add_option("--scheme", cfg.scheme, "homographic | euler | rk2");

  CLI::App* compare =
      app.add_subcommand("compare", "homographic vs euler vs rk2 on the same case");
  add_common(compare);

  std::string data_dir = riccati::default_data_dir();
  double val_mu = 0.1, val_dt = 0.1;
  CLI::App* validate = app.add_subcommand(
      "validate-reference", "check the vehicle-string reference solution end to end");
  validate->add_option("--data-dir", data_dir, "reference data directory");
  validate->add_option("--mu", val_mu, "shift parameter for the steady solve");
  validate->add_option("--dt", val_dt, "time step for the steady solve");

  double sk = 1.0, sa = 0.0, sq = 1.0, sd = 0.0, st_end = 2.0;
  std::vector<double> dt_list;
  CLI::App* order = app.add_subcommand("scalar-order",
                                       "empirical convergence order of the scalar scheme");
  order->add_option("--k", sk, "quadratic coefficient (k > 0)");
  order->add_option("--a", sa, "linear coefficient");
  order->add_option("--q", sq, "constant term (q >= 0)");
  order->add_option("--d", sd, "initial condition");
  order->add_option("--dt-list", dt_list, "comma separated dt values")->delimiter(',');
  order->add_option("--t-end", st_end, "horizon for the error measurement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
    if (validate->parsed()) return cmd_validate_reference(data_dir, val_mu, val_dt);
    if (order->parsed()) {
      if (dt_list.size() < 2) {
        std::cerr << "error: --dt-list needs at least two values\n";
        return kExitUsage;
      }
      return cmd_scalar_order(sk, sa, sq, sd, dt_list, st_end);
    }
  } catch (const riccati::DataFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataFile;
  } catch (const riccati::LyapunovSingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const riccati::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const riccati::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
