#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "wdk/cli.hpp"
#include "wdk/local_theory.hpp"
#include "wdk/solver.hpp"

namespace py = pybind11;
using namespace wdk;

namespace {

PExponent make_p(const py::object& p) {
    if (py::isinstance<py::str>(p)) return PExponent::parse(p.cast<std::string>());
    const double value = p.cast<double>();
    return std::isinf(value) ? PExponent::inf() : PExponent::finite(value);
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::certified_converged: return "certified_converged";
        case SolveStatus::converged_uncertified: return "converged_uncertified";
        case SolveStatus::max_iter_reached: return "max_iter_reached";
        case SolveStatus::degenerate: return "degenerate";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(wdk, m) {
    m.doc() = "Certified simultaneous polynomial root finding via the Weierstrass "
              "(Durand-Kerner) iteration";

    py::register_exception<Error>(m, "WdkError");

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<CVec>(), py::arg("coefficients"),
             "Coefficients highest degree first; leading coefficient nonzero.")
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("coefficients", &Polynomial::coefficients)
        .def("__call__", &Polynomial::eval, py::arg("z"))
        .def("derivative", &Polynomial::derivative, py::arg("k") = 1)
        .def("monic", &Polynomial::monic);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("e0", &Certificate::e0)
        .def_readonly("lambda_", &Certificate::lambda)
        .def_readonly("theta", &Certificate::theta)
        .def_readonly("rho", &Certificate::rho)
        .def_readonly("passed", &Certificate::passed)
        .def_readonly("quadratic", &Certificate::quadratic)
        .def("__repr__", [](const Certificate& c) {
            return "<Certificate e0=" + std::to_string(c.e0) +
                   " lambda=" + std::to_string(c.lambda) +
                   (c.passed ? " passed" : " failed") + ">";
        });

    py::class_<InclusionDisk>(m, "InclusionDisk")
        .def_readonly("center", &InclusionDisk::center)
        .def_readonly("radius", &InclusionDisk::radius);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("iterates", &IterationTrace::iterates)
        .def_readonly("corrections", &IterationTrace::corrections)
        .def_readonly("e_values", &IterationTrace::e_values)
        .def_readonly("first_step", &IterationTrace::first_step);

    py::class_<SolveReport>(m, "SolveReport")
        .def_property_readonly("status",
                               [](const SolveReport& r) { return status_name(r.status); })
        .def_readonly("certificate", &SolveReport::certificate)
        .def_readonly("roots", &SolveReport::roots)
        .def_property_readonly("disks",
                               [](const SolveReport& r) -> py::object {
                                   if (!r.disks) return py::none();
                                   return py::cast(r.disks->disks);
                               })
        .def_readonly("trace", &SolveReport::trace)
        .def_readonly("iterations", &SolveReport::iterations)
        .def("to_json", [](const SolveReport& r) { return cli::emit_json(r); });

    py::class_<LocalCheckReport>(m, "LocalCheckReport")
        .def_readonly("condition_value", &LocalCheckReport::condition_value)
        .def_readonly("threshold", &LocalCheckReport::threshold)
        .def_readonly("satisfied", &LocalCheckReport::satisfied)
        .def_readonly("quadratic", &LocalCheckReport::quadratic)
        .def_readonly("lambda_", &LocalCheckReport::lambda)
        .def_readonly("theta", &LocalCheckReport::theta)
        .def_readonly("per_step_ok", &LocalCheckReport::per_step_ok);

    m.def("from_roots",
          [](const RootVector& roots, Complex a0) { return from_roots(roots, a0); },
          py::arg("roots"), py::arg("a0") = Complex(1.0, 0.0));
    m.def("separation", &separation, py::arg("roots"));
    m.def("smale_gamma", &smale_gamma, py::arg("f"), py::arg("roots"));
    m.def("lagrange_residual", &lagrange_residual, py::arg("f"), py::arg("x"),
          py::arg("z"));

    m.def("correction",
          [](const Polynomial& f, const CVec& x) { return correction(f, x); },
          py::arg("f"), py::arg("x"));
    m.def("weierstrass_step",
          [](const Polynomial& f, const CVec& x) {
              const WeierstrassStep s = step(f, x);
              return py::make_tuple(s.output, s.correction);
          },
          py::arg("f"), py::arg("x"), "Returns (next_iterate, correction).");
    m.def("two_point_step",
          [](const Polynomial& f, const CVec& x_prev, const CVec& x_curr) {
              return two_point_step(f, x_prev, x_curr);
          },
          py::arg("f"), py::arg("x_prev"), py::arg("x_curr"));
    m.def("e_semilocal",
          [](const Polynomial& f, const CVec& x, const py::object& p) {
              return e_semilocal(f, x, make_p(p));
          },
          py::arg("f"), py::arg("x"), py::arg("p") = "inf");

    m.def("check_semilocal",
          [](const Polynomial& f, const CVec& x0, const py::object& p) {
              return check_semilocal(f, x0, make_p(p));
          },
          py::arg("f"), py::arg("x0"), py::arg("p") = "inf");
    m.def("inclusion_disks",
          [](const Polynomial& f, const CVec& xk, const py::object& p) {
              return inclusion_disks(f, xk, make_p(p)).disks;
          },
          py::arg("f"), py::arg("xk"), py::arg("p") = "inf");

    m.def("initial_guess", &initial_guess, py::arg("f"));
    m.def("solve",
          [](const Polynomial& f, std::optional<CVec> x0, const py::object& p, double tol,
             int max_iter, const std::string& mode, bool require_certificate) {
              SolveOptions opts;
              opts.p = make_p(p);
              opts.tol = tol;
              opts.max_iter = max_iter;
              if (mode == "two_point")
                  opts.mode = IterationMode::two_point;
              else if (mode != "one_point")
                  throw DomainError("mode must be one_point or two_point");
              opts.require_certificate = require_certificate;
              return solve(f, x0 ? *x0 : initial_guess(f), opts);
          },
          py::arg("f"), py::arg("x0") = py::none(), py::arg("p") = "inf",
          py::arg("tol") = 1e-12, py::arg("max_iter") = 100,
          py::arg("mode") = "one_point", py::arg("require_certificate") = false);

    m.def("radii",
          [](int n, const py::object& p) {
              const GaugeParams gp(n, make_p(p));
              py::dict out;
              out["local1"] = radius_local1(gp).value;
              out["local2"] = radius_local2(gp).value;
              out["semilocal"] = radius_semi(gp).value;
              out["semilocal_simple_threshold"] = corollary813_threshold(gp);
              return out;
          },
          py::arg("n"), py::arg("p") = "inf");

    m.def("e_local1",
          [](const CVec& x, const RootVector& roots, const py::object& p) {
              return e_local1(x, roots, make_p(p));
          },
          py::arg("x"), py::arg("roots"), py::arg("p") = "inf");
    m.def("e_local2",
          [](const CVec& x, const RootVector& roots, const py::object& p) {
              return e_local2(x, roots, make_p(p));
          },
          py::arg("x"), py::arg("roots"), py::arg("p") = "inf");
    m.def("check_local1",
          [](const Polynomial& f, const RootVector& roots, const CVec& x0,
             const py::object& p, std::optional<double> h, int steps) {
              return check_local1(f, roots, x0, make_p(p), h, steps);
          },
          py::arg("f"), py::arg("roots"), py::arg("x0"), py::arg("p") = "inf",
          py::arg("h") = py::none(), py::arg("steps") = 20);
    m.def("check_local2",
          [](const Polynomial& f, const RootVector& roots, const CVec& x0,
             const py::object& p, int steps) {
              return check_local2(f, roots, x0, make_p(p), steps);
          },
          py::arg("f"), py::arg("roots"), py::arg("x0"), py::arg("p") = "inf",
          py::arg("steps") = 20);
    m.def("check_local3",
          [](const Polynomial& f, const RootVector& roots, const CVec& x0,
             const py::object& p, const std::string& c, double sigma, int steps) {
              const CFunction tag =
                  c == "rational" ? CFunction::rational : CFunction::quadratic;
              return check_local3(f, roots, x0, make_p(p), tag, sigma, steps);
          },
          py::arg("f"), py::arg("roots"), py::arg("x0"), py::arg("p") = "inf",
          py::arg("c") = "quadratic", py::arg("sigma") = 0.5, py::arg("steps") = 20);
    m.def("sigma_feasible",
          [](double sigma, int n, const py::object& p, const std::string& c) {
              const CFunction tag =
                  c == "rational" ? CFunction::rational : CFunction::quadratic;
              return sigma_feasible(sigma, GaugeParams(n, make_p(p)), tag);
          },
          py::arg("sigma"), py::arg("n"), py::arg("p") = "inf",
          py::arg("c") = "quadratic");
}
