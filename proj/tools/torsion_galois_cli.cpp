// torsion-galois: exact division polynomials, torsion characteristic polynomials,
// and mod-3 Galois image classification for elliptic curves over Q and Q[t].
//
// Exit codes: 0 success, 1 computation/check failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "tg/corpus.hpp"
#include "tg/curve.hpp"
#include "tg/divpoly.hpp"
#include "tg/errors.hpp"
#include "tg/galois.hpp"
#include "tg/json_io.hpp"
#include "tg/torsionchar.hpp"

namespace {

using tg::json;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const json& j, const std::string& format, const std::string& pretty_text) {
    if (format == "pretty")
        std::cout << pretty_text << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

struct DivpolyArgs {
    std::string curve;
    long n = 0;
    bool primitive = false;
    std::string format = "json";
};

int run_divpoly(const DivpolyArgs& a) {
    const tg::ParsedCurve parsed = tg::parse_curve(a.curve);
    json out;
    std::string text;
    std::visit(
        [&](const auto& E) {
            tg::DivisionPolynomials D(E);
            if (a.primitive) {
                const auto& f = D.psi_tilde(a.n);
                out = tg::poly_to_json(f);
                text = tg::pretty(f);
            } else {
                const auto p = D.psi(a.n);
                if (p.y_part.degree() < 0) {
                    out = tg::poly_to_json(p.x_part);
                    text = tg::pretty(p.x_part);
                } else {
                    out = json{{"n", a.n},
                               {"x_part", tg::poly_to_json(p.x_part)},
                               {"y_part", tg::poly_to_json(p.y_part)}};
                    text = tg::pretty(p.x_part) + " + (" + tg::pretty(p.y_part) + ")*y";
                }
            }
        },
        parsed);
    emit(out, a.format, text);
    return 0;
}

struct CharpolyArgs {
    std::string curve;
    std::string u;
    long n = 0;
    std::string method = "both";
    std::vector<long> check_valuation;
    std::optional<double> numeric_check;
    std::string format = "json";
};

// Runs the requested route(s); for "both" the two must agree bitwise.
template <class S>
tg::Poly<S> charpoly_dispatch(const tg::WeierstrassCurve<S>& E, const tg::LinearFunction& u, long n,
                              const std::string& method, json& report) {
    if (n == 2 || method != "both") {
        auto m = method == "resultant" ? tg::CharpolyMethod::Resultant : tg::CharpolyMethod::Matrix;
        return tg::charpoly(E, u, n, m);
    }
    const auto via_matrix = tg::charpoly(E, u, n, tg::CharpolyMethod::Matrix);
    const auto via_resultant = tg::charpoly(E, u, n, tg::CharpolyMethod::Resultant);
    if (!(via_matrix == via_resultant)) {
        report["routes_agree"] = false;
        throw tg::Error("charpoly: matrix and resultant routes disagree");
    }
    report["routes_agree"] = true;
    return via_matrix;
}

int run_charpoly(const CharpolyArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const tg::ParsedCurve parsed = tg::parse_curve(a.curve);
    const tg::LinearFunction u = tg::parse_linear_function(a.u);

    json report{{"n", a.n}, {"u", tg::linear_function_to_string(u)}, {"method", a.method}};
    json out;
    std::string text;

    if (const auto* EQ = std::get_if<tg::CurveQ>(&parsed)) {
        report["curve"] = tg::curve_to_string(*EQ);
        const tg::PolyQ chi = charpoly_dispatch(*EQ, u, a.n, a.method, report);
        report["degree"] = chi.degree();
        for (long ell : a.check_valuation) {
            const auto prof = tg::valuation_profile(*EQ, u, a.n, chi, ell);
            report["valuation"].push_back(json{{"ell", ell},
                                               {"applicable", prof.applicable},
                                               {"min_valuation", prof.min_valuation},
                                               {"bound", prof.bound},
                                               {"pass", prof.pass}});
            if (prof.applicable && !prof.pass) throw tg::Error("valuation bound violated");
        }
        if (a.numeric_check) {
            const double res = tg::numeric_root_check(*EQ, u, a.n, chi);
            report["numeric_residual"] = res;
            if (res > *a.numeric_check) throw tg::Error("numeric residual above tolerance");
        }
        out = json{{"chi", tg::poly_to_json(chi)}};
        text = tg::pretty(chi);
    } else {
        const auto& Et = std::get<tg::CurveQt>(parsed);
        report["curve"] = tg::curve_to_string(Et);
        const tg::PolyQt chi = charpoly_dispatch(Et, u, a.n, a.method, report);
        report["degree"] = chi.degree();
        for (long ell : a.check_valuation) {
            const auto prof = tg::valuation_profile(Et, u, a.n, chi, ell);
            report["valuation"].push_back(json{{"ell", ell},
                                               {"applicable", prof.applicable},
                                               {"min_valuation", prof.min_valuation},
                                               {"bound", prof.bound},
                                               {"pass", prof.pass}});
            if (prof.applicable && !prof.pass) throw tg::Error("valuation bound violated");
        }
        if (a.numeric_check) {
            // Over Q[t] the numeric oracle runs at the standard specializations.
            double worst = 0.0;
            for (const tg::Rational& t0v : tg::golden_specialization_points()) {
                try {
                    const tg::CurveQ E0 = tg::specialize_t(Et, t0v);
                    worst = std::max(worst,
                                     tg::numeric_root_check(E0, u, a.n, tg::specialize_t(chi, t0v)));
                } catch (const tg::ArgumentError&) {
                    // specialization hit a singular fiber; skip the point
                }
            }
            report["numeric_residual"] = worst;
            if (worst > *a.numeric_check) throw tg::Error("numeric residual above tolerance");
        }
        out = json{{"chi", tg::poly_to_json(chi)}};
        text = tg::pretty(chi);
    }
    report["timings_ms"] = json{{"total", ms_since(t0)}};
    out["report"] = report;
    emit(out, a.format, text);
    return 0;
}

struct ClassifyArgs {
    std::string curve;
    long probe_bound = 100000;
    std::string format = "json";
};

int run_classify(const ClassifyArgs& a) {
    const tg::ParsedCurve parsed = tg::parse_curve(a.curve);
    const auto* EQ = std::get_if<tg::CurveQ>(&parsed);
    if (!EQ) throw tg::ArgumentError("classify-mod3: the curve must be over Q (no t)");
    const tg::Mod3Classification c = tg::classify_mod3(*EQ, a.probe_bound);

    json evidence{{"factorization", tg::to_string(c.shape)}};
    if (c.quartic_group) evidence["quartic_group"] = tg::to_string(*c.quartic_group);
    if (c.probe) {
        json p{{"found", c.probe->found}, {"ell", c.probe->ell}, {"bound", c.probe->bound}};
        if (c.probe->found) p["prime"] = c.probe->prime;
        evidence["probe"] = p;
    }
    if (c.quadratic_disc != 0) evidence["quadratic_disc"] = tg::rational_to_string(c.quadratic_disc);

    const json out{{"label", tg::to_string(c.label)},
                   {"qualifier", c.exact ? "exact" : "probable"},
                   {"evidence", evidence}};
    emit(out, a.format,
         tg::to_string(c.label) + " (" + (c.exact ? "exact" : "probable") +
             "), factorization: " + tg::to_string(c.shape));
    return 0;
}

struct MinusIdArgs {
    std::string curve;
    long ell = 0;
    long bound = 100000;
    std::string format = "json";
};

int run_minus_id(const MinusIdArgs& a) {
    const tg::ParsedCurve parsed = tg::parse_curve(a.curve);
    const auto* EQ = std::get_if<tg::CurveQ>(&parsed);
    if (!EQ) throw tg::ArgumentError("minus-id: the curve must be over Q (no t)");
    const tg::MinusIdProbe r = tg::minus_id_probe(*EQ, a.ell, a.bound);
    json out{{"found", r.found}, {"ell", r.ell}, {"bound", r.bound}};
    std::string text;
    if (r.found) {
        out["prime"] = r.prime;
        text = "-id in the mod-" + std::to_string(r.ell) + " image: witness p = " +
               std::to_string(r.prime);
    } else {
        text = "no witness up to " + std::to_string(r.bound) + " (inconclusive)";
    }
    emit(out, a.format, text);
    return 0;
}

struct ScalingArgs {
    std::string A = "1", B = "1";
    long p = 5, m = 1;
    std::string format = "json";
};

int run_scaling(const ScalingArgs& a) {
    const tg::ScalingCheck r =
        tg::scaling_experiment(tg::rational_from_string(a.A), tg::rational_from_string(a.B), a.p, a.m);
    json out{{"A", tg::rational_to_string(r.A)},
             {"B", tg::rational_to_string(r.B)},
             {"p", r.p},
             {"m", r.m},
             {"valuations", r.valuations},
             {"bounds", r.bounds},
             {"routes_agree", r.routes_agree},
             {"scaled_model_agrees", r.scaled_model_agrees},
             {"bounds_hold", r.bounds_hold},
             {"pass", r.pass},
             {"chi", tg::poly_to_json(r.chi)}};
    std::string text = std::string("scaling check ") + (r.pass ? "pass" : "FAIL") + ": v_p(c_i) = [";
    for (size_t i = 0; i < r.valuations.size(); ++i)
        text += (i ? ", " : "") + std::to_string(r.valuations[i]);
    text += "] vs bounds [";
    for (size_t i = 0; i < r.bounds.size(); ++i) text += (i ? ", " : "") + std::to_string(r.bounds[i]);
    text += "]";
    emit(out, a.format, text);
    return r.pass ? 0 : 1;
}

struct CorpusArgs {
    std::string file;
    int threads = 0;
    std::string format = "json";
};

int run_corpus_cmd(const CorpusArgs& a) {
    const json doc = tg::load_json_file(a.file);
    const tg::CorpusReport report = tg::run_corpus(doc, a.threads);
    if (a.format == "pretty") {
        for (const auto& r : report.results) {
            std::printf("[%-7s] %-40s %s\n", r.status.c_str(), r.id.c_str(), r.detail.c_str());
        }
        std::printf("passed %d, errata %d, failed %d\n", report.passed, report.errata, report.failed);
    } else {
        std::cout << tg::corpus_report_to_json(report).dump(2) << "\n";
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact torsion characteristic polynomials and mod-3 Galois images"};
    app.require_subcommand(1);

    DivpolyArgs dp;
    auto* cmd_dp = app.add_subcommand("divpoly", "Division polynomial psi_n or primitive psi~_n");
    cmd_dp->add_option("--curve", dp.curve, "a1,a2,a3,a4,a6 (rationals or expressions in t)")
        ->required();
    cmd_dp->add_option("--n", dp.n, "index n >= 0 (>= 3 with --primitive)")->required();
    cmd_dp->add_flag("--primitive", dp.primitive, "emit the primitive part psi~_n");
    cmd_dp->add_option("--format", dp.format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    CharpolyArgs cp;
    auto* cmd_cp = app.add_subcommand("charpoly", "Characteristic polynomial chi_{u,n}");
    cmd_cp->add_option("--curve", cp.curve, "a1,a2,a3,a4,a6")->required();
    cmd_cp->add_option("--u", cp.u, "u = a*y + b*x + c as \"a,b,c\"")->required();
    cmd_cp->add_option("--n", cp.n, "torsion level n >= 2")->required();
    cmd_cp->add_option("--method", cp.method, "matrix|resultant|both (default both)")
        ->check(CLI::IsMember({"matrix", "resultant", "both"}));
    cmd_cp->add_option("--check-valuation", cp.check_valuation, "prime ell: verify v_ell bounds");
    double numeric_tol = 0.0;
    auto* numopt = cmd_cp->add_option("--numeric-check", numeric_tol, "max relative root residual");
    cmd_cp->add_option("--format", cp.format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    ClassifyArgs cl;
    auto* cmd_cl = app.add_subcommand("classify-mod3", "Mod-3 Galois image label");
    cmd_cl->add_option("--curve", cl.curve, "a1,a2,a3,a4,a6 over Q")->required();
    cmd_cl->add_option("--probe-bound", cl.probe_bound, "prime search bound for the -id probe");
    cmd_cl->add_option("--format", cl.format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    MinusIdArgs mi;
    auto* cmd_mi = app.add_subcommand("minus-id", "Search a Frobenius witness for -id mod ell");
    cmd_mi->add_option("--curve", mi.curve, "a1,a2,a3,a4,a6 over Q")->required();
    cmd_mi->add_option("--ell", mi.ell, "odd prime ell >= 3")->required();
    cmd_mi->add_option("--bound", mi.bound, "prime search bound");
    cmd_mi->add_option("--format", mi.format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    ScalingArgs sc;
    auto* cmd_sc = app.add_subcommand("scaling-check", "p-power scaling valuation experiment");
    cmd_sc->add_option("--A", sc.A, "coefficient A of y^2 = x^3 + A x + B");
    cmd_sc->add_option("--B", sc.B, "coefficient B");
    cmd_sc->add_option("--p", sc.p, "prime p");
    cmd_sc->add_option("--m", sc.m, "exponent m >= 1 (lambda = p^m)");
    cmd_sc->add_option("--format", sc.format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    CorpusArgs co;
    auto* cmd_co = app.add_subcommand("corpus", "Run a JSON corpus of regression entries");
    cmd_co->add_option("--file", co.file, "corpus JSON document")->required();
    cmd_co->add_option("--threads", co.threads, "worker count (default TORSION_GALOIS_THREADS)");
    cmd_co->add_option("--format", co.format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (numopt->count() > 0) cp.numeric_check = numeric_tol;

    try {
        if (app.got_subcommand(cmd_dp)) return run_divpoly(dp);
        if (app.got_subcommand(cmd_cp)) return run_charpoly(cp);
        if (app.got_subcommand(cmd_cl)) return run_classify(cl);
        if (app.got_subcommand(cmd_mi)) return run_minus_id(mi);
        if (app.got_subcommand(cmd_sc)) return run_scaling(sc);
        if (app.got_subcommand(cmd_co)) return run_corpus_cmd(co);
    } catch (const tg::ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const tg::InadmissibleUError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
