#pragma once

// Data-driven regression corpus: golden characteristic polynomials, classifier
// fixtures, valuation and scaling checks, all described in one JSON document.
//
// Divergence policy for goldens: a computed/published mismatch is tolerated only
// when (a) both exact routes agree with each other, (b) the numeric root oracle
// confirms the computed value (for Q[t] entries: at the five specializations
// t = 1, 2, 3, -1, -2 that keep the curve nonsingular), and (c) the mismatch is
// recorded in the entry's "errata" list with the exact computed value.  Such
// entries report status "erratum" and do not fail the run; anything else does.

#include <string>
#include <vector>

#include "tg/json_io.hpp"

namespace tg {

struct CorpusEntry {
    std::string id;
    std::string kind;     // charpoly-golden | dual-route | classify-mod3 | minus-id |
                          // valuation | divpoly-degree | scaling
    std::string curve;    // "a1,...,a6"; may be empty for kinds with params
    std::string u;        // "a,b,c"; empty when not applicable
    long n = 0;
    long ell = 0;
    json params;          // kind-specific extras (probe bound, scaling A/B/p/m, ...)
    json expected;
    std::string source;   // provenance label, e.g. "published-table" or "derived:dual-route"
    std::string notes;
};

CorpusEntry corpus_entry_from_json(const json& j);

struct EntryResult {
    std::string id;
    std::string status;  // pass | erratum | fail
    std::string detail;
};

struct CorpusReport {
    std::vector<EntryResult> results;  // in corpus order
    int passed = 0, errata = 0, failed = 0;
    bool ok() const { return failed == 0; }
};

json corpus_report_to_json(const CorpusReport& report);

json load_json_file(const std::string& path);

// Worker count: explicit request, else TORSION_GALOIS_THREADS, else hardware.
int thread_budget(int requested = 0);

EntryResult run_corpus_entry(const CorpusEntry& entry);

// Runs every entry of doc["entries"] (order preserved in the report).
CorpusReport run_corpus(const json& doc, int threads = 0);

// The named curve collection in doc["curves"], in key order.
std::vector<std::pair<std::string, std::string>> corpus_curve_list(const json& doc);

inline constexpr double kNumericTolSmallN = 1e-6;  // n <= 6
inline constexpr double kNumericTolN7 = 1e-5;      // n = 7

// The t-specializations used by every Q[t] numeric confirmation.
const std::vector<Rational>& golden_specialization_points();

}  // namespace tg
