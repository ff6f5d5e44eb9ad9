// Verification suites: instance generation, exact identity checks, and
// JSON reports whose failure witnesses replay through run_instance.
#pragma once

#include "tilinglab/spec_json.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tilinglab {

struct EqMode {
    bool points = false;
    int n = 0;  // requested point count; raised per instance when too small
    std::string str() const;
};
// "symbolic" or "points:N"; throws spec_error.
EqMode parse_mode(const std::string& s);

struct SuiteConfig {
    std::string suite;
    int max = -1;      // size cap, suite-specific meaning; -1 = suite default
    int samples = -1;  // -1 = suite default
    std::uint64_t seed = 1;
    EqMode mode;
    // Thm 3.4 only: variants to evaluate besides the resolved one.
    std::vector<Thm34Variant> variants;
    int threads = 0;  // 0 = hardware concurrency
    json to_json() const;
};

struct InstanceResult {
    enum class Status { Pass, Fail, Skip } status = Status::Pass;
    std::string lhs, rhs;  // printed sides (failures only, or a skip reason)
    json extra;            // suite-specific data merged into the report
};

struct Failure {
    json instance;
    std::string lhs, rhs;
};

struct Report {
    std::string suite;
    json config;
    long pass = 0, fail = 0, skip = 0;
    std::vector<Failure> failures;
    double wall_ms = 0;
    std::vector<std::string> notes;
    json variants = json::object();
    json to_json() const;
};

std::vector<std::string> suite_names();
bool known_suite(const std::string& s);

// Deterministic list of instances for the config.
std::vector<json> suite_instances(const SuiteConfig& cfg);
// Checks one instance of a suite. Throws spec_error for malformed input.
InstanceResult run_instance(const std::string& suite, const json& instance, const EqMode& mode);
Report check(const SuiteConfig& cfg);

struct FlipInstance {
    HSpec from;
    LabelSet Fl, Fr;
    HSpec to() const { return flip(from, Fl, Fr); }
};
// Valid specs with m+n+a+c <= cap and symmetric flip sets of sizes 2m and
// 2n, nonvanishing on both sides. Same seed, same stream.
std::vector<FlipInstance> gen_flip_instances(bool prime, int cap, int count, std::uint64_t seed);
json flip_to_json(const FlipInstance& f);
FlipInstance flip_from_json(const json& j);

// Exact check of num_l * den_r == num_r * den_l with engine-side factors
// evaluated at enough integer points. Sides are products of regions' TGFs
// and explicit polynomials.
struct Side {
    std::vector<Region> regions;
    QPoly poly = QPoly(1);
};
struct PointsOutcome {
    bool equal = false;
    int points = 0;
    int degree_bound = 0;
};
PointsOutcome points_equal(const Side& lhs, const Side& rhs, int requested);

// Peel the numerator and denominator intrusion hexagons of a fern-family
// instance down to the family and collapsed regions; true when residuals
// match up to translation and the leftover corner factors agree.
bool peel_consistent(const FamilySpec& fs, Thm34Variant v, std::string* why = nullptr);

// Variant whose identity holds for the family (per the harness runs).
Thm34Variant resolved_variant(Family f);

}  // namespace tilinglab
