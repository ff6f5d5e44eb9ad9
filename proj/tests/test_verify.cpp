#include "tilinglab/engine.hpp"
#include "tilinglab/verify.hpp"

#include <doctest.h>

using namespace tilinglab;

namespace {
Report small(const std::string& suite, const std::string& mode, int samples, int max, std::uint64_t seed = 1) {
    SuiteConfig c;
    c.suite = suite;
    c.mode = parse_mode(mode);
    c.samples = samples;
    c.max = max;
    c.seed = seed;
    return check(c);
}
}  // namespace

TEST_CASE("modes") {
    CHECK_FALSE(parse_mode("symbolic").points);
    CHECK(parse_mode("points").points);
    EqMode m = parse_mode("points:40");
    CHECK(m.points);
    CHECK(m.n == 40);
    CHECK(parse_mode(m.str()).n == 40);
    CHECK_THROWS_AS(parse_mode("points:x"), spec_error);
    CHECK_THROWS_AS(parse_mode("numeric"), spec_error);
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    for (const char* s : {"macmahon", "lemma41", "lemma42", "thmA1", "kuo", "corA3", "thm31", "thm32", "remark33",
                          "thm34-A", "thm34-B", "thm34-C", "thm34-D", "thm34-E", "delta-identities",
                          "engine-agreement", "fern-weight-peel"}) {
        CHECK(known_suite(s));
        CHECK(std::find(names.begin(), names.end(), s) != names.end());
    }
    CHECK_FALSE(known_suite("everything"));
}

TEST_CASE("instance generation is deterministic") {
    for (const char* s : {"kuo", "thm31", "delta-identities", "engine-agreement"}) {
        SuiteConfig c;
        c.suite = s;
        c.samples = 10;
        c.max = 3;
        c.seed = 9;
        auto a = suite_instances(c), b = suite_instances(c);
        CHECK(a == b);
        c.seed = 10;
        CHECK_FALSE(suite_instances(c) == a);
    }
}

TEST_CASE("flip instance generator contract") {
    for (bool prime : {false, true}) {
        auto fs = gen_flip_instances(prime, 3, 12, 4);
        CHECK(fs.size() == 12);
        auto again = gen_flip_instances(prime, 3, 12, 4);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const FlipInstance& f = fs[i];
            CHECK(f.from == again[i].from);
            CHECK(f.from.prime == prime);
            CHECK(f.from.N() <= 3);
            CHECK_NOTHROW(f.from.validate());
            CHECK(int(f.Fl.size()) == 2 * f.from.m);
            CHECK(int(f.Fr.size()) == 2 * f.from.n);
            for (int v : f.Fl) CHECK(f.Fl.count(-v) == 1);
            for (int v : f.Fr) CHECK(f.Fr.count(-v) == 1);
            HSpec t = f.to();
            CHECK_NOTHROW(t.validate());
            LabelSet u1 = f.from.L1, u2 = t.L1;
            u1.insert(f.from.R1.begin(), f.from.R1.end());
            u2.insert(t.R1.begin(), t.R1.end());
            CHECK(u1 == u2);
            CHECK_FALSE(tgf_dp(hex_intrusion(f.from)).is_zero());
            CHECK_FALSE(tgf_dp(hex_intrusion(t)).is_zero());
            FlipInstance back = flip_from_json(flip_to_json(f));
            CHECK(back.from == f.from);
            CHECK(back.Fl == f.Fl);
            CHECK(back.Fr == f.Fr);
        }
    }
}

TEST_CASE("points comparison") {
    Region h = hexagon(2, 2, 2);
    QPoly p = tgf_dp(h);
    PointsOutcome ok = points_equal(Side{{h}, 1}, Side{{}, p}, 0);
    CHECK(ok.equal);
    CHECK(ok.points > ok.degree_bound);
    PointsOutcome bad = points_equal(Side{{h}, 1}, Side{{}, p + QPoly::q(3)}, 0);
    CHECK_FALSE(bad.equal);
    // products on either side
    Region t = trapezoid_S(2, 2, {-3, 1});
    CHECK(points_equal(Side{{h, t}, 2}, Side{{t}, p.scaled(2)}, 5).equal);
}

TEST_CASE("small suites pass in both modes") {
    for (const char* s : {"macmahon", "corA3", "thm31", "thm32", "kuo", "delta-identities"}) {
        Report a = small(s, "symbolic", 6, 2, 3);
        CHECK(a.fail == 0);
        CHECK(a.pass > 0);
    }
    for (const char* s : {"thm31", "thm32", "thm34-B"}) {
        Report a = small(s, "symbolic", 4, 2, 3), b = small(s, "points", 4, 2, 3);
        CHECK(a.fail == 0);
        CHECK(b.fail == 0);
        CHECK(a.pass == b.pass);
    }
}

TEST_CASE("reports and replay") {
    Report r = small("lemma42", "symbolic", -1, 3);
    json j = r.to_json();
    CHECK(j["suite"] == "lemma42");
    CHECK(j["counts"]["pass"] == r.pass);
    CHECK(j["counts"]["fail"] == 0);
    CHECK(j["failures"].empty());
    SuiteConfig c;
    c.suite = "lemma42";
    c.max = 3;
    for (const json& inst : suite_instances(c))
        CHECK(run_instance("lemma42", inst, EqMode{}).status == InstanceResult::Status::Pass);
    CHECK_THROWS_AS(run_instance("lemma42", json::parse(R"({"x":1})"), EqMode{}), spec_error);
    CHECK_THROWS_AS(run_instance("nope", json::object(), EqMode{}), spec_error);
}

TEST_CASE("peel accounting") {
    for (char c : std::string("ABCDE")) {
        FamilySpec fs{family_from_char(c), 1, 1, 1, 1, {1, 1, 0}};
        std::string why;
        CHECK_MESSAGE(peel_consistent(fs, resolved_variant(fs.family), &why), why);
    }
}
