#include "tilinglab/engine.hpp"
#include "tilinglab/formulas.hpp"
#include "tilinglab/spec_json.hpp"

#include <doctest.h>

using namespace tilinglab;

namespace {
// the two worked flips, labels doubled
HSpec fig_odd_left() { return {false, 2, 1, 4, 5, 5, {-22, -20, -18, -14, -4, 4, 10, 14, 20}, {-8, 0, 8, 20}, {-12, -6, -2, 22}}; }
HSpec fig_odd_right() { return {false, 1, 2, 4, 5, 5, {-22, -20, -18, -8, 8, 10, 20}, {-14, -4, 0, 4, 14, 20}, {-12, -6, -2, 22}}; }
HSpec fig_even_left() {
    return {true, 2, 1, 3, 5, 5, {-21, -19, -17, -13, -3, 3, 13, 19}, {-7, 7, 19}, {-23, -11, -1, 11, 23}};
}
HSpec fig_even_right() {
    return {true, 1, 2, 3, 5, 5, {-21, -19, -17, -7, 7, 19}, {-13, -3, 3, 13, 19}, {-23, -11, -1, 11, 23}};
}
}  // namespace

TEST_CASE("hexagon sizes") {
    CHECK(hexagon(2, 3, 4).tris.size() == 52);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) CHECK(hexagon(a, b, c).tris.size() == std::size_t(2 * (a * b + b * c + c * a)));
}

TEST_CASE("dented trapezoids and quartered hexagons") {
    CHECK(trapezoid_S(0, 2, {-1, 1}).tris.size() == 2);
    CHECK(tgf_dfs(trapezoid_S(0, 2, {-1, 1})) == QPoly(1));
    CHECK(tgf_dfs(quarter_R_even(0, 1, {2})) == q_plus(1));
    CHECK_THROWS_AS(trapezoid_S(1, 1, {0}), spec_error);  // wrong parity
    CHECK_THROWS_AS(trapezoid_S(1, 1, {9}), spec_error);
    CHECK_THROWS_AS(trapezoid_S(2, 0, {0}), spec_error);  // flat strip, nothing to dent
    // S_bar at k = 0 and standard weights is the same region as S
    CHECK(tgf_dfs(trapezoid_S_bar(2, 1, {1, 3}, 0, WeightFrame{})) == tgf_dfs(trapezoid_S(2, 1, {-2, 2})));
}

TEST_CASE("fern labels") {
    FernSpec f{{6, 2, 3}, false};
    CHECK(f.ao() == 9);
    CHECK(f.ae() == 2);
    CHECK(f.P_o() == LabelSet{-15, -13, -11, -5, -3, -1, 1, 3, 5, 11, 13, 15});
    CHECK(f.P_e() == LabelSet{-9, -7, 7, 9});
    CHECK_THROWS_AS(FernSpec({{1, 2}, false}).validate(), spec_error);
    CHECK(fern_weight(FernSpec{{1}, false}) == QPoly(1));
    CHECK(fern_weight(FernSpec{{2, 1, 1}, false}) == fern_weight(FernSpec{{2, 1, 1}, true}));
}

TEST_CASE("worked flips") {
    HSpec l = fig_odd_left(), r = fig_odd_right();
    CHECK_NOTHROW(l.validate());
    CHECK_NOTHROW(r.validate());
    CHECK(flip(l, {-14, -4, 4, 14}, {-8, 8}) == r);
    CHECK(flip(r, {-8, 8}, {-14, -4, 4, 14}) == l);
    HSpec z = l;
    z.L1 = {-22, -20, -18, -14, -4, 0, 4, 14, 20};
    z.R1 = {-8, 8, 10, 20};
    CHECK_THROWS_AS(z.validate(), spec_error);
    CHECK_THROWS_AS(flip(l, {-14, -4, 0, 14}, {-8, 8}), spec_error);
    CHECK_THROWS_AS(flip(l, {-14, 14}, {-8, 8}), spec_error);

    HSpec pl = fig_even_left(), pr = fig_even_right();
    CHECK_NOTHROW(pl.validate());
    CHECK_NOTHROW(pr.validate());
    CHECK(flip(pl, {-13, -3, 3, 13}, {-7, 7}) == pr);
}

TEST_CASE("hspec validation") {
    HSpec s{false, 1, 0, 0, 0, 0, {-2, 2}, {}, {}};
    CHECK_NOTHROW(s.validate());
    s.L1 = {-2};
    CHECK_THROWS_AS(s.validate(), spec_error);
    s.L1 = {-2, 2, 1};
    CHECK_THROWS_AS(s.validate(), spec_error);
}

TEST_CASE("fern families") {
    for (char c : std::string("ABCDE")) {
        FamilySpec fs{family_from_char(c), 1, 1, 1, 1, {1, 1, 0}};
        CHECK(family_char(fs.family) == c);
        CHECK_NOTHROW(fs.validate());
        for (Thm34Variant v : {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY}) {
            Thm34Instance I = thm34_instance(fs, v);
            CHECK_NOTHROW(I.num.validate());
            CHECK_NOTHROW(I.den.validate());
            CHECK(flip(I.num, I.Fl, I.Fr) == I.den);
        }
    }
    CHECK_THROWS_AS(family_from_char('F'), spec_error);
}

TEST_CASE("region JSON round trip") {
    std::vector<json> specs{
        json::parse(R"({"type":"hexagon","a":2,"b":1,"c":2,"k":1,"weights":"symbolic"})"),
        json::parse(R"({"type":"S","x":2,"y":2,"Z":[-3,1]})"),
        json::parse(R"({"type":"R_odd","x":1,"y":1,"Z":[1]})"),
        json::parse(R"({"type":"H","m":1,"n":0,"a":0,"b":1,"c":1,"L1":[-2,2],"R1":[],"B":[]})"),
        json::parse(R"({"family":"B","x":1,"y":0,"z":1,"w":1,"arms":[1]})"),
        json::parse(R"({"type":"hexagon","a":1,"b":1,"c":1,"weights":{"X":"1/2","Y":3}})"),
    };
    for (const json& j : specs) {
        Region r = region_from_json(j);
        Region back = region_from_json(region_to_json(r));
        CHECK(back.same_tiling_problem(r));
    }
    CHECK_THROWS_AS(region_from_json(json::parse(R"({"type":"torus"})")), spec_error);
    CHECK_THROWS_AS(region_from_json(json::parse(R"({"type":"hexagon","a":1})")), spec_error);
    CHECK_THROWS_AS(region_from_json(json::parse(R"([1,2])")), spec_error);
    CHECK_THROWS_AS(parse_spec_arg("{nope"), spec_error);
    QPoly p = q_int(3) * QPoly::X() + QPoly(mpq_class(1, 3));
    CHECK(poly_from_json(poly_to_json(p)) == p);
    HSpec h = fig_even_left();
    CHECK(hspec_from_json(hspec_to_json(h)) == h);
}
