// Python module exposing the core operations. Data crosses the boundary
// as JSON documents (for matrix data) and plain text (for ideals and
// cycles), matching the CLI file formats exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbcm/adhm.hpp"
#include "hilbcm/cycle.hpp"
#include "hilbcm/errors.hpp"
#include "hilbcm/io.hpp"
#include "hilbcm/monad.hpp"
#include "hilbcm/variety.hpp"

namespace py = pybind11;
using namespace hilbcm;

namespace {

IdealPresentation ideal_from_text(const std::string& text, std::size_t nvars,
                                  const std::string& order) {
    const auto gens = parse_ideal_file(text, nvars);
    if (gens.empty()) throw PreconditionError("no generators given");
    return groebner(gens, MonomialOrder::from_name(order));
}

}  // namespace

PYBIND11_MODULE(_hilbcm, m) {
    m.doc() = "commuting-matrix models of finite subschemes of affine space";

    // the base class first: translators registered later take precedence,
    // so the derived classes must come after it
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotCommutingError>(m, "NotCommutingError", PyExc_ValueError);
    py::register_exception<NotStableError>(m, "NotStableError", PyExc_ValueError);
    py::register_exception<ClusteringAmbiguityError>(m, "ClusteringAmbiguityError",
                                                     PyExc_RuntimeError);

    m.def(
        "ideal_to_datum",
        [](const std::string& text, std::size_t nvars, const std::string& order) {
            return datum_to_json(ideal_to_datum(ideal_from_text(text, nvars, order)));
        },
        py::arg("ideal_text"), py::arg("nvars") = 0, py::arg("order") = "grevlex",
        "Parse an ideal file (one polynomial per line) and return the "
        "matrix datum as a JSON string.");

    m.def(
        "datum_to_ideal",
        [](const std::string& datum_json, const std::string& order) {
            const auto x = datum_from_json(datum_json);
            return ideal_to_text(datum_to_ideal(x, MonomialOrder::from_name(order)));
        },
        py::arg("datum_json"), py::arg("order") = "grevlex",
        "Return the reduced Groebner basis of the ideal attached to a "
        "datum, one polynomial per line.");

    m.def(
        "colength",
        [](const std::string& text, std::size_t nvars,
           const std::string& order) -> py::object {
            const auto d = colength(ideal_from_text(text, nvars, order));
            if (!d) return py::none();
            return py::int_(*d);
        },
        py::arg("ideal_text"), py::arg("nvars") = 0, py::arg("order") = "grevlex",
        "Vector-space dimension of the quotient by the ideal.");

    m.def(
        "datum_from_points",
        [](const std::vector<std::vector<std::string>>& points) {
            if (points.empty()) throw PreconditionError("no points given");
            std::vector<std::vector<Rational>> pts;
            for (const auto& p : points) {
                std::vector<Rational> row;
                for (const auto& s : p) row.push_back(parse_rational(s));
                pts.push_back(std::move(row));
            }
            return datum_to_json(hilbcm::datum_from_points(pts, pts.front().size()));
        },
        py::arg("points"),
        "Datum for a reduced set of distinct points (coordinates as "
        "rational strings).");

    m.def(
        "is_stable",
        [](const std::string& datum_json) { return is_stable(datum_from_json(datum_json)); },
        py::arg("datum_json"));

    m.def(
        "krylov_rank",
        [](const std::string& datum_json) { return krylov(datum_from_json(datum_json)).rank; },
        py::arg("datum_json"), "Dimension of the span of I under the matrices.");

    m.def(
        "are_equivalent",
        [](const std::string& a, const std::string& b) {
            return are_equivalent(datum_from_json(a), datum_from_json(b)).has_value();
        },
        py::arg("datum_json_a"), py::arg("datum_json_b"),
        "Whether two data differ by a basis change.");

    m.def(
        "monad_check",
        [](const std::string& datum_json) {
            return check_complex(build_monad(datum_from_json(datum_json))).first;
        },
        py::arg("datum_json"), "Whether consecutive differentials compose to zero.");

    m.def(
        "monad_json",
        [](const std::string& datum_json) {
            return monad_to_json(build_monad(datum_from_json(datum_json)));
        },
        py::arg("datum_json"), "Full differential data of the complex as JSON.");

    m.def(
        "hilbert_chow",
        [](const std::string& datum_json, bool exact, double tolerance, std::uint64_t seed) {
            const auto x = datum_from_json(datum_json);
            const auto cyc = exact ? hilbert_chow_exact(x) : hilbert_chow_approx(x, tolerance, seed);
            return cycle_to_json(cyc, x.n);
        },
        py::arg("datum_json"), py::arg("exact") = true, py::arg("tolerance") = 1e-8,
        py::arg("seed") = 1,
        "Support cycle of the datum as JSON (exact rational path or "
        "numeric eigenvalue path).");

    m.def(
        "variety_member",
        [](const std::string& datum_json, const std::string& variety_text) {
            const auto x = datum_from_json(datum_json);
            return is_in_hilb_variety(x, parse_variety(variety_text, x.n));
        },
        py::arg("datum_json"), py::arg("variety_text"),
        "Whether the subscheme lies inside the variety cut out by the "
        "given polynomials (one per line).");

    m.def(
        "stabilize",
        [](const std::string& datum_json, std::size_t trials, std::uint64_t seed,
           const std::string& radius) -> py::object {
            const auto r = stabilize_search(datum_from_json(datum_json), trials, seed,
                                            parse_rational(radius));
            if (!r) return py::none();
            return py::str(datum_to_json(*r));
        },
        py::arg("datum_json"), py::arg("trials") = 100, py::arg("seed") = 1,
        py::arg("radius") = "1",
        "Search for a nearby stable commuting deformation; returns its "
        "JSON or None.");
}
