#include "llsem/encodings.hpp"
#include "llsem/parser.hpp"
#include "llsem/rewrite.hpp"
#include "llsem/semantics.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace llsem;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python package wraps
// them in fractions.Fraction.
Vect to_vect(const std::vector<std::string>& xs) {
    Vect v;
    for (const auto& x : xs) v.push_back(parse_rational(x));
    return v;
}

std::vector<std::string> from_vect(const Vect& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Proof checked(const std::string& text) {
    Proof p = parse_proof(text);
    auto bad = validate(p);
    if (!bad.empty()) throw KernelError("invalid proof: " + bad.front().message);
    return p;
}

}  // namespace

PYBIND11_MODULE(_llsem, m) {
    m.doc() = "Linear logic proofs, cut elimination and exact semantics";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<KernelError>(m, "KernelError", PyExc_ValueError);
    py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);
    py::register_exception<RewriteError>(m, "RewriteError", PyExc_RuntimeError);

    py::class_<Proof>(m, "Proof")
        .def_property_readonly("conclusion", [](const Proof& p) { return to_string(p.conclusion()); })
        .def_property_readonly("size", &Proof::size)
        .def_property_readonly("cut_free", [](const Proof& p) { return is_cut_free(p); })
        .def("__str__", [](const Proof& p) { return print_proof(p); })
        .def("__repr__", [](const Proof& p) { return "<Proof " + to_string(p.conclusion()) + ">"; })
        .def("__eq__", [](const Proof& a, const Proof& b) { return a == b; });

    m.def("parse_proof", &checked, py::arg("text"), "Parse and validate a proof s-expression.");
    m.def("alpha_eq", py::overload_cast<const Proof&, const Proof&>(&alpha_eq));
    m.def("exchange_normalize", &exchange_normalize);

    m.def("axiom", [](const std::string& f) { return mk_axiom(parse_formula(f)); }, py::arg("formula"));
    m.def("cut", &mk_cut, py::arg("left"), py::arg("right"), py::arg("at"));
    m.def("prom", &mk_prom);

    m.def("church", [](std::size_t n, const std::string& f) { return church(n, parse_formula(f)); }, py::arg("n"),
          py::arg("formula") = "A");
    m.def("church_body", [](std::size_t n, const std::string& f) { return church_body(n, parse_formula(f)); },
          py::arg("n"), py::arg("formula") = "A");
    m.def("comp", [](const std::string& f) { return comp(parse_formula(f)); }, py::arg("formula") = "A");
    m.def("add", [](const std::string& f) { return add(parse_formula(f)); }, py::arg("formula") = "A");
    m.def("mult", [](std::size_t k, const std::string& f) { return mult(k, parse_formula(f)); }, py::arg("m"),
          py::arg("formula") = "A");
    m.def("exp", [](std::size_t k, const std::string& f) { return exp(k, parse_formula(f)); }, py::arg("m"),
          py::arg("formula") = "A");
    m.def("church2", [](std::size_t n) { return church2(n); }, py::arg("n"));
    m.def("exp2", [](std::size_t k) { return llsem::exp2(k); }, py::arg("m"));
    m.def("hypexp", [] { return hypexp(); });

    m.def(
        "normalize",
        [](const Proof& p, std::size_t max_steps) {
            NormalizeResult r = [&] {
                py::gil_scoped_release release;
                return normalize(p, max_steps);
            }();
            py::list steps;
            for (const auto& s : r.trace.steps) {
                py::dict d;
                d["rule"] = s.rule;
                d["path"] = s.path;
                d["sizes"] = py::make_tuple(s.size_before, s.size_after);
                steps.append(d);
            }
            return py::make_tuple(r.proof, steps, r.exhausted);
        },
        py::arg("proof"), py::arg("max_steps") = kDefaultMaxSteps,
        "Returns (normal form, steps, exhausted).");

    m.def(
        "nl",
        [](const Proof& p, const std::vector<std::string>& point, const SpaceAssignment& asg) {
            return from_vect(nl(p, to_vect(point), asg).coords());
        },
        py::arg("proof"), py::arg("point"), py::arg("assign"));
    m.def(
        "tangent",
        [](const Proof& p, const std::vector<std::string>& base, const std::vector<std::string>& v,
           const SpaceAssignment& asg) { return from_vect(tangent(p, to_vect(base), to_vect(v), asg).coords()); },
        py::arg("proof"), py::arg("base"), py::arg("vector"), py::arg("assign"));
    m.def(
        "probe_equal",
        [](const Proof& p, const Proof& q, const SpaceAssignment& asg) {
            return probe_equal(p, q, asg, ProbeConfig{});
        },
        py::arg("p"), py::arg("q"), py::arg("assign"));
}
