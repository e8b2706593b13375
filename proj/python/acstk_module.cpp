#include "acstk/genera.hpp"
#include "acstk/obstruction.hpp"
#include "acstk/serialize.hpp"
#include "acstk/sphere_acs.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace acstk;

// Rational <-> fractions.Fraction. Accepts int, Fraction or a "p/q" string.
namespace pybind11::detail {
template <>
struct type_caster<acstk::Rational> {
    PYBIND11_TYPE_CASTER(acstk::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;
        try {
            value = acstk::parse_rational(py::str(src).cast<std::string>());
        } catch (const acstk::Error&) {
            return false;
        }
        return true;
    }

    static handle cast(const acstk::Rational& q, return_value_policy, handle) {
        auto fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(acstk::to_string(q)).release();
    }
};
} // namespace pybind11::detail

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Rational> imaginary_coords(const cd::CDElement& a) {
    auto c = a.coeffs();
    return {c.begin() + 1, c.end()};
}

acs::TangentVector tangent(const acs::SpherePoint& p, const std::vector<Rational>& coords) {
    return acs::tangent_projection(p, cd::CDElement::imaginary(p.level(), coords));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations for almost complex structures on spheres";
    m.attr("__version__") = ACSTK_VERSION;
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def("bernoulli", &genera::bernoulli, py::arg("k"), "B_k with B_1 = 1/6, B_2 = 1/30, ...");
    m.def("s_coefficient", &genera::s_coefficient, py::arg("k"));
    m.def(
        "l_polynomial",
        [](unsigned k, bool latex) {
            auto l = genera::l_polynomial(k);
            return latex ? sym::to_latex(l) : sym::to_string(l);
        },
        py::arg("k"), py::arg("latex") = false);
    m.def(
        "newton_polynomial", [](unsigned k) { return sym::to_string(sym::newton_polynomial(k)); },
        py::arg("k"), "Power sum nu_k in the elementary symmetric polynomials e1..ek");
    m.def(
        "series",
        [](const std::string& name, unsigned order) {
            genera::PowerSeries s(order);
            if (name == "q") {
                s = genera::q_series(order);
            } else if (name == "s") {
                s = genera::s_series(order);
            } else {
                throw Error("unknown series '" + name + "', expected 'q' or 's'");
            }
            return std::vector<Rational>(s.coeffs().begin(), s.coeffs().end());
        },
        py::arg("name"), py::arg("order"));

    m.def(
        "cd_multiply",
        [](unsigned level, std::vector<Rational> a, std::vector<Rational> b) {
            auto p = cd::CDElement(level, std::move(a)) * cd::CDElement(level, std::move(b));
            return std::vector<Rational>(p.coeffs().begin(), p.coeffs().end());
        },
        py::arg("level"), py::arg("a"), py::arg("b"), "Cayley-Dickson product of two coefficient lists");
    m.def(
        "probe_alternative",
        [](unsigned level, std::size_t samples, std::uint64_t seed) {
            return to_python(to_json(cd::probe_alternative(level, samples, seed)));
        },
        py::arg("level"), py::arg("samples") = 0, py::arg("seed") = 0);

    m.def(
        "verify_j",
        [](unsigned sphere, std::size_t samples, std::uint64_t seed) {
            return to_python(to_json(acs::verify_j(sphere, samples, seed)));
        },
        py::arg("sphere"), py::arg("samples") = 1000, py::arg("seed") = 0);
    m.def(
        "sphere_point",
        [](unsigned sphere, const std::vector<Rational>& params) {
            return imaginary_coords(acs::rational_sphere_point(sphere, params).vector());
        },
        py::arg("sphere"), py::arg("params"), "Inverse stereographic projection");
    m.def(
        "nijenhuis",
        [](unsigned sphere, const std::vector<Rational>& point, const std::vector<Rational>& u,
           const std::vector<Rational>& v) {
            auto p = acs::rational_sphere_point(sphere, point);
            return imaginary_coords(acs::nijenhuis(p, tangent(p, u), tangent(p, v)));
        },
        py::arg("sphere"), py::arg("point"), py::arg("u"), py::arg("v"),
        "N_J(u, v) at the stereographic point; u and v are projected to the tangent space");
    m.def(
        "assoc_compare",
        [](const std::vector<Rational>& point, const std::vector<Rational>& u, const std::vector<Rational>& v,
           const std::vector<Rational>& w) {
            auto p = acs::rational_sphere_point(6, point);
            auto tu = tangent(p, u), tv = tangent(p, v), tw = tangent(p, w);
            return to_python(to_json(p, tu, tv, tw, acs::compare_nijenhuis_associator(p, tu, tv, tw)));
        },
        py::arg("point"), py::arg("u"), py::arg("v"), py::arg("w"));

    m.def(
        "lemma", [](unsigned k) { return to_python(to_json(cc::replay_lemma_pontryagin_euler(k))); },
        py::arg("k"));
    m.def(
        "classify",
        [](unsigned n, std::size_t samples, std::uint64_t seed) {
            obs::ClassifyOptions options;
            options.samples = samples;
            options.seed = seed;
            return to_python(to_json(obs::classify_sphere(n, options)));
        },
        py::arg("n"), py::arg("samples") = 100, py::arg("seed") = 0);
}
