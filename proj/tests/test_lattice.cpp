#include "tilinglab/engine.hpp"
#include "tilinglab/regions.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace tilinglab;

TEST_CASE("orientation from parity") {
    for (int c = -3; c <= 3; ++c)
        for (int p = -5; p <= 5; ++p) {
            Tri t = Tri::at(c, p);
            CHECK(t.well_formed());
            CHECK(t.left() == (((p - c) % 2 + 2) % 2 == 0));
        }
}

TEST_CASE("adjacency") {
    for (int c = -2; c <= 2; ++c)
        for (int p = -3; p <= 3; ++p) {
            Tri t = Tri::at(c, p);
            Tri h = horizontal_partner(t);
            CHECK(h.left() != t.left());
            CHECK(horizontal_partner(h) == t);
            auto ns = lattice_neighbors(t);
            CHECK(ns.size() == 3);
            for (const Tri& u : ns) {
                CHECK(u.left() != t.left());
                auto e = edge_between(t, u);
                REQUIRE(e.has_value());
                auto [l, r] = edge_tris(*e);
                CHECK(l.left());
                CHECK(((l == t && r == u) || (l == u && r == t)));
            }
            CHECK_FALSE(edge_between(t, t).has_value());
        }
}

TEST_CASE("lozenge weights") {
    WeightFrame f;
    CHECK(horizontal_weight(0, f) == QPoly(1));
    CHECK(horizontal_weight(3, f) == q_plus(3));
    CHECK(horizontal_weight(-3, f) == q_plus(3));
    f.axis_offset2 = 2;
    CHECK(horizontal_weight(2, f) == QPoly(1));
    CHECK(horizontal_weight(-1, f) == q_plus(3));
    WeightFrame s = WeightFrame::symbolic();
    CHECK(horizontal_weight(1, s) == (QPoly::monomial(1, 1, 1, 0) + QPoly::monomial(1, -1, 0, 1)).scaled(mpq_class(1, 2)));
    Tri t = Tri::at(0, 0);
    for (const Tri& u : lattice_neighbors(t)) {
        QPoly w = lozenge_weight(t, u, WeightFrame{});
        if (u == horizontal_partner(t)) CHECK(w == horizontal_weight(u.pos, WeightFrame{}));
        else CHECK(w == QPoly(1));
    }
    CHECK_THROWS_AS(lozenge_weight(t, Tri::at(0, 2), WeightFrame{}), std::invalid_argument);
}

TEST_CASE("balance") {
    CHECK(balance(hexagon(1, 1, 1)) == 0);
    CHECK(balance(hexagon(2, 3, 4)) == 0);
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y) CHECK(std::abs(balance(trapezoid_S(x, y, {}))) == y);
    FernSpec f{{3}, false};
    CHECK(std::abs(balance(Region{fern_tris(f, 1), {}, {}, {}})) == 3);
}

TEST_CASE("peeling forced lozenges preserves the TGF") {
    Region pair;
    Tri t = Tri::at(0, 1);
    pair.tris = {t, horizontal_partner(t)};
    PeelResult pr = peel_forced(pair);
    CHECK(pr.residual.tris.empty());
    CHECK(pr.factor == lozenge_weight(t, horizontal_partner(t), pair.frame));
    CHECK(pr.forced.size() == 1);

    std::vector<Region> rs{hexagon(1, 2, 2), trapezoid_S(2, 2, {-3, 1}), trapezoid_S(1, 3, {-3, -1, 1}),
                           quarter_R_even(2, 1, {2}), quarter_R_odd(1, 1, {1})};
    Region h = hexagon(2, 2, 2);
    h.barriers.insert(Edge{*std::find_if(h.tris.begin(), h.tris.end(), [](const Tri& u) { return u.left(); }),
                           Dir::Horizontal});
    rs.push_back(h);
    for (const Region& r : rs) {
        PeelResult p = peel_forced(r);
        CHECK(tgf_dfs(r) == p.factor * tgf_dfs(p.residual));
    }

    Region odd = hexagon(1, 1, 1);
    odd.tris.erase(odd.tris.begin());
    PeelResult bad = peel_forced(odd);
    CHECK(bad.factor.is_zero());
    CHECK(bad.residual.tris.empty());
}

TEST_CASE("horizontal lozenge count") {
    CHECK(horizontal_count(hexagon(1, 1, 1)) == 1);
    // what is left is one horizontal lozenge on the axis
    CHECK(horizontal_count(trapezoid_S(0, 2, {-1, 1})) == 1);
    Region odd = hexagon(1, 1, 1);
    odd.tris.erase(odd.tris.begin());
    CHECK_FALSE(horizontal_count(odd).has_value());
}

TEST_CASE("translation") {
    Region h = hexagon(2, 1, 2);
    CHECK(h.translated(0, 0).same_tiling_problem(h));
    Region t = h.translated(2, 4);
    CHECK(t.tris.size() == h.tris.size());
    CHECK(t.translated(-2, -4).same_tiling_problem(h));
}

TEST_CASE("rendering") {
    Region h = hexagon(1, 2, 1);
    std::string svg = render_svg(h);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK_FALSE(render_ascii(h).empty());
}
