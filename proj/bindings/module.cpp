// Python bindings for the homographic Riccati solver.  Matrices cross the
// boundary as numpy arrays; symmetric arguments are checked and stored in
// packed symmetric form on the C++ side.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "riccati/baselines.hpp"
#include "riccati/cases.hpp"
#include "riccati/lqr.hpp"
#include "riccati/lyapunov.hpp"
#include "riccati/scalar.hpp"
#include "riccati/scheme.hpp"

namespace py = pybind11;
using namespace riccati;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const DoubleArray& arr) {
  if (arr.ndim() != 2) throw DomainError("expected a 2-D array");
  Matrix m(arr.shape(0), arr.shape(1));
  auto r = arr.unchecked<2>();
  for (py::ssize_t i = 0; i < arr.shape(0); ++i)
    for (py::ssize_t j = 0; j < arr.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

SymMatrix to_sym(const DoubleArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
    throw DomainError("expected a square 2-D array");
  auto r = arr.unchecked<2>();
  double scale = 0.0, asym = 0.0;
  for (py::ssize_t i = 0; i < arr.shape(0); ++i)
    for (py::ssize_t j = 0; j < arr.shape(1); ++j) {
      scale = std::max(scale, std::abs(r(i, j)));
      asym = std::max(asym, std::abs(r(i, j) - r(j, i)));
    }
  if (asym > 1e-9 * (1.0 + scale))
    throw DomainError("matrix is not symmetric within tolerance");
  SymMatrix s(arr.shape(0));
  for (py::ssize_t i = 0; i < arr.shape(0); ++i)
    for (py::ssize_t j = i; j < arr.shape(1); ++j)
      s.set(i, j, 0.5 * (r(i, j) + r(j, i)));
  return s;
}

py::array_t<double> from_matrix(const Matrix& m) {
  py::array_t<double> arr({m.rows(), m.cols()});
  auto w = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return arr;
}

py::array_t<double> from_sym(const SymMatrix& s) { return from_matrix(s.full()); }

py::array_t<double> from_vector(const std::vector<double>& v) {
  py::array_t<double> arr(v.size());
  auto w = arr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) w(i) = v[i];
  return arr;
}

ExplicitScheme parse_scheme(const std::string& name) {
  if (name == "euler") return ExplicitScheme::forward_euler;
  if (name == "rk2") return ExplicitScheme::rk2_midpoint;
  throw DomainError("unknown explicit scheme '" + name + "' (expected euler or rk2)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Implicit homographic (harmonic) scheme for Riccati differential equations";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<DataFileError>(m, "DataFileError", PyExc_IOError);

  // ---- linear algebra ----
  m.def(
      "sym_eigen",
      [](const DoubleArray& s, double tol) {
        const Spectrum sp = sym_eigen(to_sym(s), tol);
        return py::make_tuple(from_vector(sp.eigenvalues), from_matrix(sp.eigenvectors));
      },
      py::arg("s"), py::arg("tol") = 1e-12,
      "Jacobi eigendecomposition; returns (ascending eigenvalues, eigenvector columns)");
  m.def(
      "solve_linear",
      [](const DoubleArray& a, const std::vector<double>& b) {
        return from_vector(solve_linear(to_matrix(a), b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "min_eigenvalue", [](const DoubleArray& s) { return min_eigenvalue(to_sym(s)); },
      py::arg("s"));
  m.def(
      "is_psd", [](const DoubleArray& s, double tol) { return is_psd(to_sym(s), tol); },
      py::arg("s"), py::arg("tol") = 1e-10);

  // ---- Lyapunov ----
  m.def(
      "solve_lyapunov",
      [](const DoubleArray& s, const DoubleArray& y) {
        return from_sym(solve_lyapunov(to_matrix(s), to_sym(y)));
      },
      py::arg("s"), py::arg("y"), "Solve S^T X + X S = Y for symmetric X");
  m.def(
      "lyapunov_operator",
      [](const DoubleArray& s, const DoubleArray& x) {
        return from_sym(lyapunov_operator(to_matrix(s), to_sym(x)));
      },
      py::arg("s"), py::arg("x"));

  // ---- scalar scheme ----
  py::class_<ScalarProblem>(m, "ScalarProblem")
      .def(py::init<double, double, double, double>(), py::arg("k"), py::arg("a"),
           py::arg("q"), py::arg("d") = 0.0)
      .def_readwrite("k", &ScalarProblem::k)
      .def_readwrite("a", &ScalarProblem::a)
      .def_readwrite("q", &ScalarProblem::q)
      .def_readwrite("d", &ScalarProblem::d);
  py::class_<ScalarDiagnostics>(m, "ScalarDiagnostics")
      .def_readonly("x_star", &ScalarDiagnostics::x_star)
      .def_readonly("x_minus", &ScalarDiagnostics::x_minus)
      .def_readonly("tau", &ScalarDiagnostics::tau)
      .def_readonly("alpha", &ScalarDiagnostics::alpha)
      .def_readonly("beta", &ScalarDiagnostics::beta);
  py::class_<SignSplit>(m, "SignSplit")
      .def(py::init<double, double>(), py::arg("a_plus"), py::arg("a_minus"))
      .def_static("complementary", &SignSplit::complementary)
      .def_readwrite("a_plus", &SignSplit::a_plus)
      .def_readwrite("a_minus", &SignSplit::a_minus);
  m.def("scalar_diagnostics", &diagnostics, py::arg("problem"));
  m.def("homographic_step",
        py::overload_cast<const ScalarProblem&, double, double>(&homographic_step),
        py::arg("problem"), py::arg("x"), py::arg("dt"));
  m.def("homographic_step",
        py::overload_cast<const ScalarProblem&, double, double, const SignSplit&>(
            &homographic_step),
        py::arg("problem"), py::arg("x"), py::arg("dt"), py::arg("split"));
  m.def("dt_admissible", &dt_admissible, py::arg("problem"), py::arg("dt"));
  m.def("exact_solution", &exact_solution, py::arg("problem"), py::arg("t"));
  m.def("geometric_ratio",
        py::overload_cast<const ScalarProblem&, double>(&geometric_ratio),
        py::arg("problem"), py::arg("dt"));
  m.def("contraction_defect", &contraction_defect, py::arg("problem"), py::arg("dt"));
  py::class_<ErrorBoundParams>(m, "ErrorBoundParams")
      .def(py::init<double, double>(), py::arg("C"), py::arg("eta"))
      .def_readwrite("C", &ErrorBoundParams::C)
      .def_readwrite("eta", &ErrorBoundParams::eta);
  py::class_<ErrorBoundConstants>(m, "ErrorBoundConstants")
      .def_readonly("A", &ErrorBoundConstants::A)
      .def_readonly("B", &ErrorBoundConstants::B);
  m.def("error_bound_constants", &error_bound_constants, py::arg("problem"),
        py::arg("params"));
  py::class_<OrderStudy>(m, "OrderStudy")
      .def_readonly("dts", &OrderStudy::dts)
      .def_readonly("max_errors", &OrderStudy::max_errors)
      .def_readonly("slope", &OrderStudy::slope);
  m.def("order_study", &order_study, py::arg("problem"), py::arg("dt_list"),
        py::arg("t_end"), py::arg("d_delta"));

  // ---- matrix scheme ----
  py::class_<RiccatiProblem>(m, "RiccatiProblem")
      .def(py::init([](const DoubleArray& a, const DoubleArray& k, const DoubleArray& q,
                       py::object x0) {
             if (x0.is_none())
               return RiccatiProblem(to_matrix(a), to_sym(k), to_sym(q));
             return RiccatiProblem(to_matrix(a), to_sym(k), to_sym(q),
                                   to_sym(x0.cast<DoubleArray>()));
           }),
           py::arg("A"), py::arg("K"), py::arg("Q"), py::arg("X0") = py::none())
      .def_property_readonly("A", [](const RiccatiProblem& p) { return from_matrix(p.A); })
      .def_property_readonly("K", [](const RiccatiProblem& p) { return from_sym(p.K); })
      .def_property_readonly("Q", [](const RiccatiProblem& p) { return from_sym(p.Q); })
      .def_property_readonly("X0", [](const RiccatiProblem& p) { return from_sym(p.X0); })
      .def_property_readonly("dim", &RiccatiProblem::dim);
  py::class_<SchemeParams>(m, "SchemeParams")
      .def(py::init<double, double, double, std::size_t>(), py::arg("dt"), py::arg("mu"),
           py::arg("steady_tol") = 1e-12, py::arg("max_steps") = 200000)
      .def_readwrite("dt", &SchemeParams::dt)
      .def_readwrite("mu", &SchemeParams::mu)
      .def_readwrite("steady_tol", &SchemeParams::steady_tol)
      .def_readwrite("max_steps", &SchemeParams::max_steps);
  py::class_<StepRecord>(m, "StepRecord")
      .def_readonly("index", &StepRecord::index)
      .def_readonly("t", &StepRecord::t)
      .def_property_readonly("X", [](const StepRecord& r) { return from_sym(r.X); })
      .def_readonly("eigenvalues", &StepRecord::eigenvalues)
      .def_readonly("are_residual", &StepRecord::are_residual)
      .def_readonly("min_eig", &StepRecord::min_eig);
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("label", &Trajectory::label)
      .def_readonly("dt", &Trajectory::dt)
      .def_property_readonly("status",
                             [](const Trajectory& t) { return std::string(to_string(t.status)); })
      .def_readonly("records", &Trajectory::records)
      .def("__len__", [](const Trajectory& t) { return t.records.size(); })
      .def("times",
           [](const Trajectory& t) {
             std::vector<double> v;
             v.reserve(t.records.size());
             for (const auto& r : t.records) v.push_back(r.t);
             return from_vector(v);
           })
      .def("eigenvalues",
           [](const Trajectory& t) {
             const std::size_t rows = t.records.size();
             const std::size_t cols = rows ? t.records.front().eigenvalues.size() : 0;
             py::array_t<double> arr({rows, cols});
             auto w = arr.mutable_unchecked<2>();
             for (std::size_t i = 0; i < rows; ++i)
               for (std::size_t j = 0; j < cols; ++j) w(i, j) = t.records[i].eigenvalues[j];
             return arr;
           })
      .def("min_eigs",
           [](const Trajectory& t) {
             std::vector<double> v;
             for (const auto& r : t.records) v.push_back(r.min_eig);
             return from_vector(v);
           })
      .def("are_residuals", [](const Trajectory& t) {
        std::vector<double> v;
        for (const auto& r : t.records) v.push_back(r.are_residual);
        return from_vector(v);
      });

  m.def(
      "select_mu",
      [](const DoubleArray& a, double margin) {
        const MuSelection sel = select_mu(to_matrix(a), margin);
        return py::make_tuple(sel.mu, sel.condition_satisfied);
      },
      py::arg("A"), py::arg("margin") = 0.1);
  m.def(
      "shift_condition_holds",
      [](const DoubleArray& a, double mu) { return shift_condition_holds(to_matrix(a), mu); },
      py::arg("A"), py::arg("mu"));
  m.def(
      "implicit_shift",
      [](const DoubleArray& a, double mu) { return from_matrix(implicit_shift(to_matrix(a), mu)); },
      py::arg("A"), py::arg("mu"));
  m.def(
      "harmonic_step",
      [](const RiccatiProblem& prob, const SchemeParams& params, const DoubleArray& x) {
        return from_sym(harmonic_step(prob, params, to_sym(x)));
      },
      py::arg("problem"), py::arg("params"), py::arg("X"));
  m.def(
      "are_residual",
      [](const RiccatiProblem& prob, const DoubleArray& x) {
        return are_residual(prob, to_sym(x));
      },
      py::arg("problem"), py::arg("X"));
  m.def("integrate", &integrate, py::arg("problem"), py::arg("params"), py::arg("t_end"),
        py::arg("label") = "");
  py::class_<SteadyResult>(m, "SteadyResult")
      .def_property_readonly("X_inf",
                             [](const SteadyResult& r) { return from_sym(r.X_inf); })
      .def_readonly("trajectory", &SteadyResult::trajectory)
      .def_readonly("converged", &SteadyResult::converged);
  m.def("solve_steady", &solve_steady, py::arg("problem"), py::arg("params"),
        py::arg("label") = "", py::arg("record") = true);
  m.def(
      "monotonicity_condition",
      [](const RiccatiProblem& prob, const SchemeParams& params, const DoubleArray& x_inf) {
        return monotonicity_condition(prob, params, to_sym(x_inf));
      },
      py::arg("problem"), py::arg("params"), py::arg("X_inf"));

  // ---- explicit baselines ----
  m.def(
      "riccati_rhs",
      [](const RiccatiProblem& prob, const DoubleArray& x) {
        return from_sym(riccati_rhs(prob, to_sym(x)));
      },
      py::arg("problem"), py::arg("X"));
  m.def(
      "explicit_step",
      [](const std::string& scheme, const RiccatiProblem& prob, const DoubleArray& x,
         double dt) {
        const ExplicitStepResult r = explicit_step(parse_scheme(scheme), prob, to_sym(x), dt);
        return py::make_tuple(from_sym(r.X), r.diverged);
      },
      py::arg("scheme"), py::arg("problem"), py::arg("X"), py::arg("dt"));
  m.def(
      "explicit_integrate",
      [](const std::string& scheme, const RiccatiProblem& prob, double dt, std::size_t steps,
         const std::string& label) {
        return explicit_integrate(parse_scheme(scheme), prob, dt, steps, label);
      },
      py::arg("scheme"), py::arg("problem"), py::arg("dt"), py::arg("steps"),
      py::arg("label") = "");

  // ---- LQR ----
  py::class_<ControlPlant>(m, "ControlPlant")
      .def(py::init([](const DoubleArray& a, const DoubleArray& b, const DoubleArray& r,
                       const DoubleArray& q, py::object d) {
             if (d.is_none())
               return ControlPlant(to_matrix(a), to_matrix(b), to_sym(r), to_sym(q));
             return ControlPlant(to_matrix(a), to_matrix(b), to_sym(r), to_sym(q),
                                 to_sym(d.cast<DoubleArray>()));
           }),
           py::arg("A"), py::arg("B"), py::arg("R"), py::arg("Q"), py::arg("D") = py::none())
      .def_property_readonly("A", [](const ControlPlant& p) { return from_matrix(p.A); })
      .def_property_readonly("B", [](const ControlPlant& p) { return from_matrix(p.B); })
      .def_property_readonly("R", [](const ControlPlant& p) { return from_sym(p.R); })
      .def_property_readonly("Q", [](const ControlPlant& p) { return from_sym(p.Q); })
      .def_property_readonly("D", [](const ControlPlant& p) { return from_sym(p.D); });
  m.def("control_gram", [](const ControlPlant& p) { return from_sym(control_gram(p)); },
        py::arg("plant"));
  m.def(
      "feedback_gain",
      [](const ControlPlant& p, const DoubleArray& x) {
        return from_matrix(feedback_gain(p, to_sym(x)));
      },
      py::arg("plant"), py::arg("X"));
  py::class_<ClosedLoopTrajectory>(m, "ClosedLoopTrajectory")
      .def_readonly("dt", &ClosedLoopTrajectory::dt)
      .def_readonly("times", &ClosedLoopTrajectory::times)
      .def_readonly("states", &ClosedLoopTrajectory::states)
      .def_readonly("controls", &ClosedLoopTrajectory::controls)
      .def_readonly("diverged", &ClosedLoopTrajectory::diverged);
  m.def(
      "simulate_closed_loop",
      [](const ControlPlant& plant, const DoubleArray& gain, const std::vector<double>& y0,
         double dt_sim, double t_end) {
        return simulate_closed_loop(plant, to_matrix(gain), y0, dt_sim, t_end);
      },
      py::arg("plant"), py::arg("gain"), py::arg("y0"), py::arg("dt_sim"), py::arg("t_end"));
  m.def("quadratic_cost",
        py::overload_cast<const ControlPlant&, const ClosedLoopTrajectory&>(&quadratic_cost),
        py::arg("plant"), py::arg("trajectory"));

  // ---- benchmark cases ----
  py::class_<CaseSpec>(m, "CaseSpec")
      .def_readonly("name", &CaseSpec::name)
      .def_readonly("problem", &CaseSpec::problem)
      .def_property_readonly("plant",
                             [](const CaseSpec& c) -> py::object {
                               if (!c.plant) return py::none();
                               return py::cast(*c.plant);
                             })
      .def_property_readonly("known_limit", [](const CaseSpec& c) -> py::object {
        if (!c.known_limit) return py::none();
        return from_sym(*c.known_limit);
      });
  m.def("square_root_case", &square_root_case);
  m.def("oscillator_case", &oscillator_case, py::arg("alpha"), py::arg("omega2") = 250.0,
        py::arg("delta") = 0.0, py::arg("b") = 1.0);
  m.def("vehicle_dynamics", []() { return from_matrix(vehicle_dynamics()); });
  m.def("vehicles_case", py::overload_cast<>(&vehicles_case));
  m.def(
      "wave_case",
      [](std::size_t n_modes, double c, double length, double alpha, double beta) {
        return wave_case(n_modes, c, length, alpha, beta);
      },
      py::arg("n_modes") = 5, py::arg("c") = 1.0, py::arg("length") = 1.0,
      py::arg("alpha") = 1.0, py::arg("beta") = 10.0);
  m.def("default_data_dir", &default_data_dir);
  m.def(
      "load_vehicle_reference",
      [](const std::string& dir) { return from_sym(load_vehicle_reference(dir)); },
      py::arg("data_dir"));
  m.def(
      "validate_vehicle_reference",
      [](const DoubleArray& a, const std::string& dir) {
        const ReferenceValidation v = validate_vehicle_reference(to_matrix(a), dir);
        return py::make_tuple(v.residual, v.accepted);
      },
      py::arg("A"), py::arg("data_dir"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
