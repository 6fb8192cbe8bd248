// Python bindings: thin JSON-string bridge over the C++ core.  Every entry point
// takes the same textual inputs as the CLI and returns a JSON string; the Python
// package decodes it into dicts so the wire format stays single-sourced.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

#include "tg/corpus.hpp"
#include "tg/curve.hpp"
#include "tg/divpoly.hpp"
#include "tg/errors.hpp"
#include "tg/galois.hpp"
#include "tg/json_io.hpp"
#include "tg/torsionchar.hpp"

namespace py = pybind11;
using tg::json;

namespace {

std::string divpoly(const std::string& curve, long n, bool primitive) {
    const tg::ParsedCurve parsed = tg::parse_curve(curve);
    json out;
    std::visit(
        [&](const auto& E) {
            tg::DivisionPolynomials D(E);
            if (primitive) {
                out = tg::poly_to_json(D.psi_tilde(n));
            } else {
                const auto p = D.psi(n);
                if (p.y_part.degree() < 0)
                    out = tg::poly_to_json(p.x_part);
                else
                    out = json{{"n", n},
                               {"x_part", tg::poly_to_json(p.x_part)},
                               {"y_part", tg::poly_to_json(p.y_part)}};
            }
        },
        parsed);
    return out.dump();
}

std::string charpoly(const std::string& curve, const std::string& u_text, long n,
                     const std::string& method) {
    const tg::ParsedCurve parsed = tg::parse_curve(curve);
    const tg::LinearFunction u = tg::parse_linear_function(u_text);
    json out;
    std::visit(
        [&](const auto& E) {
            if (n == 2 || method != "both") {
                auto m = method == "resultant" ? tg::CharpolyMethod::Resultant
                                               : tg::CharpolyMethod::Matrix;
                out = json{{"chi", tg::poly_to_json(tg::charpoly(E, u, n, m))}};
                return;
            }
            const auto a = tg::charpoly(E, u, n, tg::CharpolyMethod::Matrix);
            const auto b = tg::charpoly(E, u, n, tg::CharpolyMethod::Resultant);
            if (!(a == b)) throw tg::Error("charpoly: matrix and resultant routes disagree");
            out = json{{"chi", tg::poly_to_json(a)}, {"routes_agree", true}};
        },
        parsed);
    return out.dump();
}

std::string classify_mod3(const std::string& curve, long probe_bound) {
    const tg::ParsedCurve parsed = tg::parse_curve(curve);
    const auto* EQ = std::get_if<tg::CurveQ>(&parsed);
    if (!EQ) throw tg::ArgumentError("classify_mod3: the curve must be over Q (no t)");
    const tg::Mod3Classification c = tg::classify_mod3(*EQ, probe_bound);
    json evidence{{"factorization", tg::to_string(c.shape)}};
    if (c.quartic_group) evidence["quartic_group"] = tg::to_string(*c.quartic_group);
    if (c.probe) {
        json p{{"found", c.probe->found}, {"ell", c.probe->ell}, {"bound", c.probe->bound}};
        if (c.probe->found) p["prime"] = c.probe->prime;
        evidence["probe"] = p;
    }
    return json{{"label", tg::to_string(c.label)},
                {"qualifier", c.exact ? "exact" : "probable"},
                {"evidence", evidence}}
        .dump();
}

std::string minus_id(const std::string& curve, long ell, long bound) {
    const tg::ParsedCurve parsed = tg::parse_curve(curve);
    const auto* EQ = std::get_if<tg::CurveQ>(&parsed);
    if (!EQ) throw tg::ArgumentError("minus_id: the curve must be over Q (no t)");
    const tg::MinusIdProbe r = tg::minus_id_probe(*EQ, ell, bound);
    json out{{"found", r.found}, {"ell", r.ell}, {"bound", r.bound}};
    if (r.found) out["prime"] = r.prime;
    return out.dump();
}

std::string run_corpus(const std::string& path, int threads) {
    const json doc = tg::load_json_file(path);
    return tg::corpus_report_to_json(tg::run_corpus(doc, threads)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact torsion characteristic polynomials and mod-3 Galois images";

    py::register_exception<tg::ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<tg::InadmissibleUError>(m, "InadmissibleUError", PyExc_ValueError);

    m.def("divpoly_json", &divpoly, py::arg("curve"), py::arg("n"), py::arg("primitive") = false,
          "Division polynomial psi_n (or psi~_n) as a JSON string");
    m.def("charpoly_json", &charpoly, py::arg("curve"), py::arg("u"), py::arg("n"),
          py::arg("method") = "both", "chi_{u,n} as a JSON string");
    m.def("classify_mod3_json", &classify_mod3, py::arg("curve"), py::arg("probe_bound") = 100000,
          "Mod-3 Galois image label as a JSON string");
    m.def("minus_id_json", &minus_id, py::arg("curve"), py::arg("ell"), py::arg("bound") = 100000,
          "Frobenius -id witness search as a JSON string");
    m.def("run_corpus_json", &run_corpus, py::arg("path"), py::arg("threads") = 0,
          "Run a corpus file; report as a JSON string");
}
