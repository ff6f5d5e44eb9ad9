#include "tilinglab/qlaurent.hpp"

#include <doctest.h>

#include <random>

using namespace tilinglab;

namespace {
QPoly q(int e) { return QPoly::q(e); }
QPoly half(const QPoly& p) { return p.scaled(mpq_class(1, 2)); }
}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == QPoly(1));
    CHECK(q_int(3) == q(2) + QPoly(1) + q(-2));
    for (int n = -6; n <= 6; ++n) CHECK(q_int(-n) == -q_int(n));
}

TEST_CASE("q-factorials and hyperfactorials") {
    CHECK(q_fact(0) == QPoly(1));
    CHECK(q_fact(2) == q(1) + q(-1));
    CHECK(q_fact(3) == q(3) + q(1).scaled(2) + q(-1).scaled(2) + q(-3));
    CHECK(hyper_q(0) == QPoly(1));
    CHECK(hyper_q(2) == QPoly(1));
    CHECK(hyper_q(3) == q(1) + q(-1));
}

TEST_CASE("q_plus") {
    CHECK(q_plus(0) == QPoly(1));
    CHECK(q_plus(1) == half(q(1) + q(-1)));
    CHECK(q_plus(2) == half(q(2) + q(-2)));
    for (int n = -7; n <= 7; ++n) {
        CHECK(q_plus(-n) == q_plus(n));
        // the expansion-verified form of the plus/int product
        CHECK(q_plus(n) * q_int(n) == half(q_int(2 * n)));
    }
}

TEST_CASE("delta products") {
    CHECK(delta_11({}) == QPoly(1));
    CHECK(delta_11({-1, 1}) == QPoly(1));
    CHECK(delta_11({0, 2}) == half(q(1) + q(-1)));
    CHECK_THROWS_AS(delta_11({0, 1}), label_error);
    CHECK(delta_21({2}) == QPoly(1));
    CHECK(delta_21({2, 4}) == half(q_int(6)) * half(q_int(2)));
    CHECK_THROWS_AS(delta_21({0, 2}), label_error);
    CHECK(delta_12({0}, {2}) == half(q(1) + q(-1)));
    CHECK_THROWS_AS(delta_12({2}, {2}), label_error);
    CHECK(delta_22({}, {2, 4}) == QPoly(1));
}

TEST_CASE("delta_11_xyk") {
    CHECK(delta_11_xyk({3}, 2, 1, 5) == QPoly(1));
    CHECK(delta_11_xyk({1, 2}, 1, 1, 0) == half(QPoly::X() + QPoly::Y()));
    CHECK_THROWS_AS(delta_11_xyk({0, 1}, 1, 1, 0), label_error);
    // X = Y = 1, k = 0 and W shifted by (x+y+1)/2 gives delta_11
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y) {
            int n = x + y;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::set<int> W;
                LabelSet Z;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) {
                        W.insert(i + 1);
                        Z.insert(2 * (i + 1) - (n + 1));
                    }
                CHECK(delta_11_xyk(W, x, y, 0).subst_xy(1, 1) == delta_11(Z));
            }
        }
}

TEST_CASE("square roots") {
    CHECK(sqrt_perfect(QRat(QPoly(1))) == QRat(QPoly(1)));
    QPoly s = half(q(1) + q(-1));
    QRat r = sqrt_perfect(QRat(s * s));
    CHECK(r == QRat(s));
    CHECK(r.num().lead_coeff() > 0);
    FactoredRatio fr;
    for (int z : {1, 1, 3, 3}) fr.num.push_back(q_int(2 * z).scaled(mpq_class(1, 4)));
    for (int z : {1, 1, 2, 2}) fr.den.push_back(q_int(2 * z).scaled(mpq_class(1, 4)));
    CHECK(sqrt_perfect(fr) == QRat(q_int(6), q_int(4)));
    CHECK_THROWS_AS(sqrt_poly(q(1) + QPoly(1)), not_square_error);
    QPoly p = q_int(5) * q_plus(3) - QPoly(2);
    CHECK(sqrt_poly(p * p) * sqrt_poly(p * p) == p * p);
}

TEST_CASE("evaluation") {
    CHECK(eval_at(q_int(2), 1) == 2);
    CHECK(eval_at(q_int(3), 2) == mpq_class(21, 4));
    CHECK(eval_at(q_plus(1), 3) == mpq_class(5, 3));
    CHECK_THROWS(eval_at(q_int(2), 0));
    for (int n = 0; n <= 6; ++n) {
        CHECK(eval_at(q_int(n), 1) == n);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        CHECK(eval_at(q_fact(n), 1) == mpq_class(f));
    }
    // H(4) = 0! 1! 2! 3! = 12
    CHECK(eval_at(hyper_q(4), 1) == 12);
}

TEST_CASE("evaluation is a ring morphism") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        QPoly a, b;
        for (int i = 0; i < 4; ++i) {
            a += QPoly::monomial(mpq_class(long(rng() % 7) - 3, 1 + rng() % 3), int(rng() % 9) - 4, rng() % 2, rng() % 2);
            b += QPoly::monomial(mpq_class(long(rng() % 7) - 3, 1 + rng() % 3), int(rng() % 9) - 4, rng() % 2, 0);
        }
        mpq_class q0(long(rng() % 5) + 1, long(rng() % 3) + 1), x0(long(rng() % 4)), y0(long(rng() % 4) - 1, 2);
        q0.canonicalize();
        y0.canonicalize();
        CHECK(eval_at(a * b, q0, x0, y0) == eval_at(a, q0, x0, y0) * eval_at(b, q0, x0, y0));
        CHECK(eval_at(a + b, q0, x0, y0) == eval_at(a, q0, x0, y0) + eval_at(b, q0, x0, y0));
    }
}

TEST_CASE("QRat equality by cross multiplication") {
    QRat a(q_int(4), q_int(2));
    CHECK(a == QRat(q_int(4) * q_int(3), q_int(2) * q_int(3)));
    CHECK(a * a.inverse() == QRat(QPoly(1)));
    CHECK(QRat(q_int(4), q_int(2)).reduced().den() == QPoly(1));
    CHECK(poly_divexact(q_int(6), q_int(3)) == q(3) + q(-3));
    CHECK_THROWS(poly_divexact(q_int(5), q_int(2)));
}
