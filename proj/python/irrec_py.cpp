// Python bindings for the main operations: exact counts, invariants,
// verification suites and the reference tables. Rationals cross the boundary
// as Fraction-compatible (num, den) string pairs or Python Fractions.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "irrec/curve.hpp"
#include "irrec/dessins.hpp"
#include "irrec/local.hpp"
#include "irrec/oracle.hpp"
#include "irrec/pruned.hpp"
#include "irrec/quantum.hpp"
#include "irrec/verify.hpp"

namespace py = pybind11;
using namespace irrec;

namespace {

py::object to_fraction(const Rational& r) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.get_num().get_str() + "/" + r.get_den().get_str());
}

py::dict report_to_dict(const Report& r) {
    py::dict d;
    d["suite"] = r.suite;
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict e;
        e["id"] = c.id;
        e["description"] = c.description;
        e["status"] = c.status;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["anchor"] = c.anchor;
        checks.append(e);
    }
    d["checks"] = checks;
    d["failures"] = r.hard_failures();
    return d;
}

}  // namespace

PYBIND11_MODULE(_irrec, m) {
    m.doc() = "exact topological recursion and dessin enumeration";

    m.def("count_u", [](int g, const MuTuple& mu) { return to_fraction(dessins::u_count(g, mu)); },
          py::arg("g"), py::arg("mu"), "edge-weighted count U_g(mu)");
    m.def("count_big_b", [](int g, const MuTuple& mu) { return to_fraction(dessins::b_big(g, mu)); },
          py::arg("g"), py::arg("mu"), "weighted dessin count B_{g,n}(mu)");
    m.def("count_pruned", [](int g, const MuTuple& mu) { return to_fraction(pruned::b_pruned(g, mu)); },
          py::arg("g"), py::arg("mu"), "weighted pruned dessin count b_{g,n}(mu)");
    m.def("three_term_u", [](int g, long n) { return to_fraction(dessins::three_term_u(g, n)); });
    m.def("epsilon_hz", [](int g, long n) { return to_fraction(dessins::epsilon_hz(g, n)); });
    m.def("count_u_local",
          [](int g, const MuTuple& mu, const std::string& norm) {
              return to_fraction(local::u_airy(
                  g, mu, norm == "full" ? AiryNorm::Square : AiryNorm::HalfSquare));
          },
          py::arg("g"), py::arg("mu"), py::arg("norm") = "half");
    m.def("one_point", [](int g) { return to_fraction(local::one_point_closed(g)); });
    m.def("f_bullet", [](long v, long e) { return to_fraction(quantum::f_bullet(v, e)); });

    m.def("invariant_string",
          [](const std::string& curve, int g, int n) {
              const SpectralCurve* c = find_curve(curve);
              if (!c) throw std::invalid_argument("unknown curve: " + curve);
              const auto& w = c->eo_invariant(g, n);
              return n <= 3 ? w.body.to_multirat().str() : w.body.str();
          },
          py::arg("curve"), py::arg("g"), py::arg("n"));
    m.def("invariant_taylor",
          [](const std::string& curve, int g, int n, long order) {
              const SpectralCurve* c = find_curve(curve);
              if (!c) throw std::invalid_argument("unknown curve: " + curve);
              const auto& w = c->eo_invariant(g, n);
              std::vector<Rational> centers(static_cast<size_t>(n), Rational(0));
              std::vector<long> orders(static_cast<size_t>(n), order);
              auto tensor = w.body.taylor_tensor(centers, orders);
              py::list out;
              for (const auto& v : tensor) out.append(to_fraction(v));
              return out;
          },
          py::arg("curve"), py::arg("g"), py::arg("n"), py::arg("order"),
          "row-major Taylor coefficients at the origin");
    m.def("branch_classification", [](const std::string& curve) {
        const SpectralCurve* c = find_curve(curve);
        if (!c) throw std::invalid_argument("unknown curve: " + curve);
        py::list out;
        for (const auto& b : c->branch_points())
            out.append(py::make_tuple(to_fraction(b.alpha), to_string(b.cls)));
        return out;
    });

    m.def("dessins_brute",
          [](const MuTuple& mu, int threads) {
              py::dict d;
              for (auto& [g, v] : oracle::dessins_brute(mu, threads)) d[py::int_(g)] = to_fraction(v);
              return d;
          },
          py::arg("mu"), py::arg("threads") = 1);

    m.def("verify",
          [](const std::string& suite, long dmax, int threads) {
              verify::Options opt;
              opt.dmax = dmax;
              opt.threads = threads;
              return report_to_dict(verify::run_suite(suite, opt));
          },
          py::arg("suite") = "all", py::arg("dmax") = 6, py::arg("threads") = 1);
    m.def("suite_names", [] { return verify::suite_names(); });
}
