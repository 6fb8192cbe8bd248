#include "tg/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "tg/galois.hpp"
#include "tg/torsionchar.hpp"

namespace tg {

const std::vector<Rational>& golden_specialization_points() {
    static const std::vector<Rational> pts{Rational(1), Rational(2), Rational(3), Rational(-1),
                                           Rational(-2)};
    return pts;
}

CorpusEntry corpus_entry_from_json(const json& j) {
    CorpusEntry e;
    e.id = j.at("id").get<std::string>();
    e.kind = j.at("kind").get<std::string>();
    e.curve = j.value("curve", std::string());
    e.u = j.value("u", std::string());
    e.n = j.value("n", 0L);
    e.ell = j.value("ell", 0L);
    e.params = j.value("params", json::object());
    e.expected = j.value("expected", json::object());
    e.source = j.value("source", std::string());
    e.notes = j.value("notes", std::string());
    return e;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    json doc;
    in >> doc;
    // An entry may point at a sibling golden file instead of inlining "expected".
    if (doc.is_object() && doc.contains("entries")) {
        const std::filesystem::path dir = std::filesystem::path(path).parent_path();
        for (json& e : doc.at("entries")) {
            if (!e.is_object() || !e.contains("expected_file")) continue;
            const std::string rel = e.at("expected_file").get<std::string>();
            std::ifstream gin(dir / rel);
            if (!gin) throw ArgumentError("cannot open golden file " + rel);
            json golden;
            gin >> golden;
            e["expected"] = golden;
            e.erase("expected_file");
        }
    }
    return doc;
}

int thread_budget(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TORSION_GALOIS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::pair<std::string, std::string>> corpus_curve_list(const json& doc) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!doc.contains("curves")) return out;
    for (const auto& item : doc.at("curves").items())
        out.emplace_back(item.key(), item.value().get<std::string>());
    return out;
}

namespace {

double numeric_tolerance(long n) { return n >= 7 ? kNumericTolN7 : kNumericTolSmallN; }

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// --- charpoly-golden -------------------------------------------------------

// Exact coefficient comparison; returns the indices where computed != published.
template <class P, class FromJson>
std::vector<int> mismatched_indices(const P& computed, const json& published, FromJson&& from_json) {
    P pub = from_json(published);
    int top = std::max(computed.degree(), pub.degree());
    std::vector<int> out;
    for (int i = 0; i <= top; ++i)
        if (!(computed.coeff(i) == pub.coeff(i))) out.push_back(i);
    return out;
}

struct GoldenOutcome {
    bool pass = false;
    bool erratum = false;
    std::string detail;
};

// Confirms computed-vs-published divergences against the documented errata and
// the numeric oracle.  `computed_matches_documented(i)` must say whether the
// documented computed value at index i equals the freshly computed coefficient.
GoldenOutcome adjudicate_golden(const std::vector<int>& mismatches, const json& errata,
                                const std::function<bool(int, const json&)>& computed_matches_documented,
                                const std::function<std::string()>& run_numeric_oracle) {
    GoldenOutcome out;
    std::set<int> documented;
    for (const json& e : errata) documented.insert(e.at("coeff_index").get<int>());

    std::set<int> found(mismatches.begin(), mismatches.end());
    if (found.empty()) {
        if (!documented.empty()) {
            out.detail = "documented errata did not materialize; golden file is stale";
            return out;
        }
        out.pass = true;
        out.detail = "matches published table";
        return out;
    }
    if (found != documented) {
        std::string diff = "mismatch at coefficient(s)";
        for (int i : found) diff += " " + std::to_string(i);
        out.detail = diff + " not matching documented errata";
        return out;
    }
    for (const json& e : errata) {
        int idx = e.at("coeff_index").get<int>();
        if (!computed_matches_documented(idx, e)) {
            out.detail = "computed value at coefficient " + std::to_string(idx) +
                         " differs from the documented erratum";
            return out;
        }
    }
    std::string oracle_failure = run_numeric_oracle();
    if (!oracle_failure.empty()) {
        out.detail = oracle_failure;
        return out;
    }
    out.erratum = true;
    out.detail = "documented erratum confirmed (" + std::to_string(found.size()) +
                 " coefficient(s); routes agree, numeric oracle passed)";
    return out;
}

EntryResult golden_q(const CorpusEntry& entry, const CurveQ& E) {
    const LinearFunction u = parse_linear_function(entry.u);
    const PolyQ chi_m = charpoly(E, u, entry.n, CharpolyMethod::Matrix);
    const PolyQ chi_r = charpoly(E, u, entry.n, CharpolyMethod::Resultant);
    if (!(chi_m == chi_r)) return {entry.id, "fail", "matrix and resultant routes disagree"};

    auto mism = mismatched_indices(chi_r, entry.expected.at("chi"), polyq_from_json);
    json errata = entry.expected.value("errata", json::array());
    GoldenOutcome g = adjudicate_golden(
        mism, errata,
        [&](int idx, const json& e) {
            return chi_r.coeff(idx) == rational_from_string(e.at("computed").get<std::string>());
        },
        [&]() -> std::string {
            double resid = numeric_root_check(E, u, entry.n, chi_r);
            if (resid > numeric_tolerance(entry.n))
                return "numeric oracle residual " + fmt_double(resid) + " over tolerance";
            return "";
        });
    return {entry.id, g.pass ? "pass" : (g.erratum ? "erratum" : "fail"), g.detail};
}

EntryResult golden_qt(const CorpusEntry& entry, const CurveQt& E) {
    const LinearFunction u = parse_linear_function(entry.u);
    const PolyQt chi_m = charpoly(E, u, entry.n, CharpolyMethod::Matrix);
    const PolyQt chi_r = charpoly(E, u, entry.n, CharpolyMethod::Resultant);
    if (!(chi_m == chi_r)) return {entry.id, "fail", "matrix and resultant routes disagree"};

    auto mism = mismatched_indices(chi_r, entry.expected.at("chi"), polyqt_from_json);
    json errata = entry.expected.value("errata", json::array());
    GoldenOutcome g = adjudicate_golden(
        mism, errata,
        [&](int idx, const json& e) {
            PolyQ documented = polyq_from_json(json{{"ring", "Q"}, {"coeffs", e.at("computed")}});
            return chi_r.coeff(idx) == documented;
        },
        [&]() -> std::string {
            for (const Rational& t0 : golden_specialization_points()) {
                CurveQ Et = specialize_t(E, t0);  // throws if the fiber is singular
                PolyQ chi_t = specialize_t(chi_r, t0);
                // Exact consistency with a direct computation on the fiber...
                PolyQ direct = charpoly(Et, u, entry.n, CharpolyMethod::Resultant);
                if (!(direct == chi_t))
                    return "specialization at t = " + rational_to_string(t0) +
                           " disagrees with the direct computation";
                // ... and the numeric confirmation.
                double resid = numeric_root_check(Et, u, entry.n, chi_t);
                if (resid > numeric_tolerance(entry.n))
                    return "numeric oracle residual " + fmt_double(resid) + " at t = " +
                           rational_to_string(t0);
            }
            return "";
        });
    return {entry.id, g.pass ? "pass" : (g.erratum ? "erratum" : "fail"), g.detail};
}

// --- the other kinds ---------------------------------------------------------

EntryResult dual_route(const CorpusEntry& entry, const ParsedCurve& curve) {
    const LinearFunction u = parse_linear_function(entry.u);
    if (std::holds_alternative<CurveQ>(curve)) {
        const CurveQ& E = std::get<CurveQ>(curve);
        PolyQ a = charpoly(E, u, entry.n, CharpolyMethod::Matrix);
        PolyQ b = charpoly(E, u, entry.n, CharpolyMethod::Resultant);
        if (!(a == b)) return {entry.id, "fail", "routes disagree"};
        double resid = numeric_root_check(E, u, entry.n, a);
        if (resid > numeric_tolerance(entry.n))
            return {entry.id, "fail", "numeric residual " + fmt_double(resid)};
        return {entry.id, "pass", "routes agree; numeric residual " + fmt_double(resid)};
    }
    const CurveQt& E = std::get<CurveQt>(curve);
    PolyQt a = charpoly(E, u, entry.n, CharpolyMethod::Matrix);
    PolyQt b = charpoly(E, u, entry.n, CharpolyMethod::Resultant);
    if (!(a == b)) return {entry.id, "fail", "routes disagree"};
    for (const Rational& t0 : golden_specialization_points()) {
        CurveQ Et = specialize_t(E, t0);
        PolyQ chi_t = specialize_t(a, t0);
        if (!(charpoly(Et, u, entry.n, CharpolyMethod::Resultant) == chi_t))
            return {entry.id, "fail", "specialization mismatch at t = " + rational_to_string(t0)};
        double resid = numeric_root_check(Et, u, entry.n, chi_t);
        if (resid > numeric_tolerance(entry.n))
            return {entry.id, "fail",
                    "numeric residual " + fmt_double(resid) + " at t = " + rational_to_string(t0)};
    }
    return {entry.id, "pass", "routes agree; specializations confirmed"};
}

EntryResult classify_entry(const CorpusEntry& entry, const CurveQ& E) {
    long bound = entry.params.value("probe_bound", 100000L);
    Mod3Classification c = classify_mod3(E, bound);
    std::string want = entry.expected.at("label").get<std::string>();
    bool want_exact = entry.expected.value("exact", true);
    if (to_string(c.label) != want)
        return {entry.id, "fail", "classified as " + to_string(c.label) + ", expected " + want};
    if (c.exact != want_exact)
        return {entry.id, "fail", std::string("exactness ") + (c.exact ? "exact" : "probable") +
                                      ", expected " + (want_exact ? "exact" : "probable")};
    return {entry.id, "pass", "label " + to_string(c.label) + (c.exact ? " (exact)" : " (probable)")};
}

EntryResult minus_id_entry(const CorpusEntry& entry, const CurveQ& E) {
    long bound = entry.params.value("bound", 100000L);
    MinusIdProbe probe = minus_id_probe(E, entry.ell, bound);
    bool want_found = entry.expected.at("found").get<bool>();
    if (probe.found != want_found)
        return {entry.id, "fail",
                probe.found ? "unexpected witness " + std::to_string(probe.prime) : "no witness found"};
    if (want_found && entry.expected.contains("prime")) {
        long want_prime = entry.expected.at("prime").get<long>();
        if (probe.prime != want_prime)
            return {entry.id, "fail",
                    "witness " + std::to_string(probe.prime) + ", expected " + std::to_string(want_prime)};
    }
    return {entry.id, "pass",
            probe.found ? "witness prime " + std::to_string(probe.prime)
                        : "no witness below " + std::to_string(bound)};
}

template <class S>
EntryResult valuation_entry_impl(const CorpusEntry& entry, const WeierstrassCurve<S>& E) {
    const LinearFunction u = parse_linear_function(entry.u);
    Poly<S> chi = charpoly(E, u, entry.n, CharpolyMethod::Resultant);
    ValuationProfile prof = valuation_profile(E, u, entry.n, chi, entry.ell);
    bool want_applicable = entry.expected.value("applicable", true);
    if (prof.applicable != want_applicable)
        return {entry.id, "fail", std::string("applicability ") + (prof.applicable ? "yes" : "no")};
    if (entry.expected.contains("bound") && prof.bound != entry.expected.at("bound").get<long>())
        return {entry.id, "fail", "bound " + std::to_string(prof.bound)};
    if (want_applicable && !prof.pass)
        return {entry.id, "fail",
                "min valuation " + std::to_string(prof.min_valuation) + " below bound " +
                    std::to_string(prof.bound)};
    if (!prof.applicable)
        return {entry.id, "pass",
                "outside regime (observed min " + std::to_string(prof.min_valuation) + ")"};
    return {entry.id, "pass",
            "min valuation " + std::to_string(prof.min_valuation) + " >= " + std::to_string(prof.bound)};
}

template <class S>
EntryResult divpoly_degree_entry_impl(const CorpusEntry& entry, const WeierstrassCurve<S>& E) {
    DivisionPolynomials<S> dp(E);
    const Poly<S>& psi = dp.psi_tilde(entry.n);
    long want_degree = entry.expected.at("degree").get<long>();
    if (psi.degree() != want_degree)
        return {entry.id, "fail", "degree " + std::to_string(psi.degree())};
    if (psi.degree() != primitive_degree(entry.n))
        return {entry.id, "fail", "degree law violated"};
    if (entry.expected.contains("lc")) {
        Rational want_lc = rational_from_string(entry.expected.at("lc").get<std::string>());
        S lc = psi.lc();
        if (!(lc == scalar_from_rational<S>(want_lc)))
            return {entry.id, "fail", "leading coefficient mismatch"};
    }
    return {entry.id, "pass", "degree " + std::to_string(psi.degree())};
}

EntryResult scaling_entry(const CorpusEntry& entry) {
    Rational A = rational_from_string(entry.params.at("A").get<std::string>());
    Rational B = rational_from_string(entry.params.at("B").get<std::string>());
    long p = entry.params.at("p").get<long>();
    long m = entry.params.at("m").get<long>();
    ScalingCheck check = scaling_experiment(A, B, p, m);
    if (!check.pass) {
        std::string why = !check.routes_agree        ? "routes disagree"
                          : !check.scaled_model_agrees ? "scaled-model cross-check failed"
                                                       : "valuation bound violated";
        return {entry.id, "fail", why};
    }
    return {entry.id, "pass", "valuations meet 2m(8-i) bounds; cross-checks agree"};
}

}  // namespace

EntryResult run_corpus_entry(const CorpusEntry& entry) {
    try {
        if (entry.kind == "scaling") return scaling_entry(entry);
        ParsedCurve curve = parse_curve(entry.curve);
        const bool over_q = std::holds_alternative<CurveQ>(curve);
        if (entry.kind == "charpoly-golden")
            return over_q ? golden_q(entry, std::get<CurveQ>(curve))
                          : golden_qt(entry, std::get<CurveQt>(curve));
        if (entry.kind == "dual-route") return dual_route(entry, curve);
        if (entry.kind == "classify-mod3") {
            if (!over_q) return {entry.id, "fail", "classification needs a curve over Q"};
            return classify_entry(entry, std::get<CurveQ>(curve));
        }
        if (entry.kind == "minus-id") {
            if (!over_q) return {entry.id, "fail", "probe needs a curve over Q"};
            return minus_id_entry(entry, std::get<CurveQ>(curve));
        }
        if (entry.kind == "valuation")
            return over_q ? valuation_entry_impl(entry, std::get<CurveQ>(curve))
                          : valuation_entry_impl(entry, std::get<CurveQt>(curve));
        if (entry.kind == "divpoly-degree")
            return over_q ? divpoly_degree_entry_impl(entry, std::get<CurveQ>(curve))
                          : divpoly_degree_entry_impl(entry, std::get<CurveQt>(curve));
        return {entry.id, "fail", "unknown corpus kind '" + entry.kind + "'"};
    } catch (const std::exception& ex) {
        return {entry.id, "fail", std::string("exception: ") + ex.what()};
    }
}

CorpusReport run_corpus(const json& doc, int threads) {
    std::vector<CorpusEntry> entries;
    for (const json& j : doc.at("entries")) entries.push_back(corpus_entry_from_json(j));

    CorpusReport report;
    report.results.resize(entries.size());
    const int workers = std::min<int>(thread_budget(threads), std::max<std::size_t>(entries.size(), 1));

    std::mutex mu;
    std::size_t next = 0;
    auto work = [&] {
        while (true) {
            std::size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= entries.size()) return;
                idx = next++;
            }
            report.results[idx] = run_corpus_entry(entries[idx]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (const EntryResult& r : report.results) {
        if (r.status == "pass") ++report.passed;
        else if (r.status == "erratum") ++report.errata;
        else ++report.failed;
    }
    return report;
}

json corpus_report_to_json(const CorpusReport& report) {
    json results = json::array();
    for (const EntryResult& r : report.results)
        results.push_back(json{{"id", r.id}, {"status", r.status}, {"detail", r.detail}});
    return json{{"results", results},
                {"summary",
                 json{{"passed", report.passed}, {"errata", report.errata}, {"failed", report.failed}}}};
}

}  // namespace tg
