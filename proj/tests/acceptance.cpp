// Acceptance run: one line per criterion, nonzero exit if any fails.
// Reports are written to acceptance_reports/ under the working directory.
#include "tilinglab/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace tilinglab;

namespace {

std::filesystem::path report_dir = "acceptance_reports";

Report run(const std::string& suite, const std::string& mode = "symbolic", int samples = -1, int max = -1,
           std::uint64_t seed = 1, std::vector<Thm34Variant> variants = {}, const std::string& tag = "") {
    SuiteConfig c;
    c.suite = suite;
    c.mode = parse_mode(mode);
    c.samples = samples;
    c.max = max;
    c.seed = seed;
    c.variants = std::move(variants);
    Report r = check(c);
    std::ofstream(report_dir / (suite + tag + ".json")) << r.to_json().dump(2) << '\n';
    return r;
}

std::string counts(const Report& r) {
    return r.suite + " " + std::to_string(r.pass) + "/" + std::to_string(r.fail) + "/" + std::to_string(r.skip);
}

bool clean(const Report& r, long min_pass = 1) { return r.fail == 0 && r.pass >= min_pass; }

struct Criterion {
    int id;
    std::string what;
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    std::filesystem::create_directories(report_dir);
    std::vector<Criterion> cs{
        {1, "hexagon counts equal the box formula, a,b,c <= 4",
         [](std::string& d) {
             Report r = run("macmahon", "symbolic", -1, 4);
             d = counts(r);
             return clean(r, 125);
         }},
        {2, "trapezoid formula exhaustive to x+y <= 9, 100 wrong-cardinality samples vanish",
         [](std::string& d) {
             SuiteConfig c;
             c.suite = "lemma41";
             c.max = 9;
             c.samples = 100;
             long wrong = 0;
             for (const json& j : suite_instances(c)) wrong += j.contains("cardinality");
             Report r = run("lemma41", "symbolic", 100, 9);
             d = counts(r) + ", wrong-cardinality " + std::to_string(wrong);
             return clean(r) && wrong == 100;
         }},
        {3, "quartered hexagon formulas exhaustive to x+y <= 7, both parities",
         [](std::string& d) {
             Report r = run("lemma42", "symbolic", -1, 7);
             d = counts(r);
             return clean(r);
         }},
        {4, "weighted trapezoid formula to x+y <= 6 (symbolic and specialized), condensation recurrence",
         [](std::string& d) {
             Report a = run("thmA1", "symbolic", -1, 6);
             Report k = run("kuo", "symbolic", 40, 7);
             d = counts(a) + ", " + counts(k);
             return clean(a) && clean(k, 30);
         }},
        {5, "weighted hexagon formula, a,b,c <= 3, k in {-1,0,2}",
         [](std::string& d) {
             Report r = run("corA3", "symbolic", -1, 3);
             d = counts(r);
             return clean(r, 192);
         }},
        {6, "shuffling ratios, odd and even diagonals: 50 at points, 10 symbolic each",
         [](std::string& d) {
             Report a = run("thm31", "points", 50, 4, 7, {}, "-points");
             Report b = run("thm32", "points", 50, 4, 7, {}, "-points");
             Report c = run("thm31", "symbolic", 10, 4, 11, {}, "-symbolic");
             Report e = run("thm32", "symbolic", 10, 4, 11, {}, "-symbolic");
             d = counts(a) + ", " + counts(b) + ", " + counts(c) + ", " + counts(e);
             return clean(a, 50) && clean(b, 50) && clean(c, 10) && clean(e, 10);
         }},
        {7, "ratio independent of barriers: 10 instances x 5 barrier sets",
         [](std::string& d) {
             SuiteConfig c;
             c.suite = "remark33";
             c.samples = 10;
             bool five = true;
             for (const json& j : suite_instances(c)) five &= j.at("barrier_sets").size() == 5;
             Report r = run("remark33", "symbolic", 10);
             d = counts(r) + (five ? ", 5 sets each" : ", missing barrier sets");
             return clean(r, 10) && r.skip == 0 && five;
         }},
        {8, "fern families A-E at points, 3 per y-case, variant question resolved",
         [](std::string& d) {
             bool ok = true;
             for (char f : std::string("ABCDE")) {
                 Report r = run(std::string("thm34-") + f, "points", 3, 2, 1,
                                {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY});
                 std::string resolved = r.variants.value("resolved", "");
                 // every variant that differs from the resolved one must fail where it differs
                 int separating = 0;
                 for (auto& [name, v] : r.variants.items()) {
                     if (name == "resolved" || name == resolved) continue;
                     if (v["differs"].get<long>() > 0) {
                         ++separating;
                         ok &= v["pass_where_differs"].get<long>() == 0;
                     }
                 }
                 if (f == 'A' || f == 'D') ok &= separating > 0;
                 ok &= clean(r, 9) && r.skip == 0 && r.variants[resolved]["fail"].get<long>() == 0;
                 d += std::string(d.empty() ? "" : ", ") + f + ":" + resolved + " " + std::to_string(r.pass) + "/" +
                      std::to_string(r.fail);
             }
             return ok;
         }},
        {9, "search == profile DP on 200 random regions; == diagonal split for m+n+a+c <= 3",
         [](std::string& d) {
             Report r = run("engine-agreement", "symbolic", 200, 3);
             d = counts(r) + (r.notes.empty() ? "" : ", " + r.notes[0]);
             return clean(r, 200) && r.skip == 0;
         }},
        {10, "label-product identities on 500 sets; peel accounting on the criterion 8 instances",
         [](std::string& d) {
             Report a = run("delta-identities", "symbolic", 500);
             Report b = run("fern-weight-peel", "symbolic", 3, 2, 1);
             d = counts(a) + ", " + counts(b);
             return clean(a, 500) && clean(b, 45);
         }},
    };

    int failed = 0;
    for (const Criterion& c : cs) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << c.what << ") [" << detail
                  << "] " << std::fixed;
        std::cout.precision(1);
        std::cout << s << "s" << std::endl;
        failed += !ok;
    }
    return failed ? 1 : 0;
}
