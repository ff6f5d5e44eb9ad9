#include "tilinglab/formulas.hpp"

#include "tilinglab/engine.hpp"

namespace tilinglab {

namespace {

mpz_class fact(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), unsigned(n));
    return r;
}

mpz_class hyper(int n) {
    mpz_class r = 1;
    for (int i = 0; i < n; ++i) r *= fact(i);
    return r;
}

QPoly prod_fact(int from, int to, int step_mul, int step_add) {
    // prod_{i=from}^{to} <step_mul*i + step_add>!
    QPoly r(1);
    for (int i = from; i <= to; ++i) r *= q_fact(step_mul * i + step_add);
    return r;
}

void check_range(const LabelSet& Z, int lo, int hi, int parity, const char* what) {
    for (int z : Z)
        if (z < lo || z > hi || (z & 1) != parity)
            throw label_error(std::string(what) + ": label " + std::to_string(z) + " out of range");
}

QPoly plus_xy(int n) {
    QPoly f;
    f.add_term(Mono{n, 1, 0}, mpq_class(1, 2));
    f.add_term(Mono{-n, 0, 1}, mpq_class(1, 2));
    return f;
}

}  // namespace

mpq_class macmahon(int a, int b, int c) {
    mpq_class r(hyper(a) * hyper(b) * hyper(c) * hyper(a + b + c), hyper(a + b) * hyper(b + c) * hyper(c + a));
    r.canonicalize();
    return r;
}

QPoly lemma41_S(int x, int y, const LabelSet& Z) {
    check_range(Z, -(x + y - 1), x + y - 1, (x + y + 1) & 1, "trapezoid");
    if (int(Z.size()) != y) return QPoly();
    return poly_divexact(delta_11(Z), prod_fact(1, y - 1, 1, 0));
}

QPoly lemma42_R_even(int x, int y, const LabelSet& Z) {
    check_range(Z, 2, 2 * (x + y), 0, "R_{x,2y}");
    if (int(Z.size()) != y) return QPoly();
    QPoly num = delta_21(Z);
    for (int z : Z) num *= q_int(z).scaled(mpq_class(1, 2));
    return poly_divexact(num, prod_fact(1, y, 2, -1));
}

QPoly lemma42_R_odd(int x, int y, const LabelSet& Z) {
    check_range(Z, 1, 2 * (x + y) + 1, 1, "R_{x,2y+1}");
    if (int(Z.size()) != y + 1) return QPoly();
    return poly_divexact(delta_21(Z), prod_fact(1, y + 1, 2, -2));
}

QPoly thmA1_S(int x, int y, const std::set<int>& W, int k) {
    for (int w : W)
        if (w < 1 || w > x + y) throw label_error("W must be a subset of [x+y]");
    if (int(W.size()) != y) return QPoly();
    return poly_divexact(delta_11_xyk(W, x, y, k), prod_fact(1, y - 1, 1, 0));
}

QPoly corA3_hex(int a, int b, int c, int k) {
    QPoly r(1);
    for (int i = 1; i <= b; ++i)
        for (int j = 1; j <= c; ++j) r *= plus_xy(k + i - j);
    QPoly num = hyper_q(a) * hyper_q(b) * hyper_q(c) * hyper_q(a + b + c);
    QPoly den = hyper_q(a + b) * hyper_q(b + c) * hyper_q(c + a);
    return r * poly_divexact(num, den);
}

namespace {

struct FlipSets {
    LabelSet lflip, rflip;  // L1 \ L2, L2 \ L1
};

FlipSets flip_sets(const LabelSet& L1, const LabelSet& R1, const LabelSet& L2, const LabelSet& R2) {
    LabelSet u1 = L1, u2 = L2, i1, i2;
    u1.insert(R1.begin(), R1.end());
    u2.insert(R2.begin(), R2.end());
    for (int v : L1)
        if (R1.count(v)) i1.insert(v);
    for (int v : L2)
        if (R2.count(v)) i2.insert(v);
    if (u1 != u2 || i1 != i2) throw label_error("label sets are not related by a flip");
    FlipSets f;
    for (int v : L1)
        if (!L2.count(v)) f.lflip.insert(v);
    for (int v : L2)
        if (!L1.count(v)) f.rflip.insert(v);
    for (const LabelSet* s : {&f.lflip, &f.rflip})
        for (int v : *s)
            if (!s->count(-v)) throw label_error("flip sets must be symmetric");
    return f;
}

QRat delta_ratio(const LabelSet& L1, const LabelSet& R1, const LabelSet& L2, const LabelSet& R2) {
    return QRat(delta_11(L2) * delta_11(R2), delta_11(L1) * delta_11(R1));
}

}  // namespace

QRat thm31_rhs(int m, int n, int a, int b, const LabelSet& L1, const LabelSet& R1, const LabelSet& L2,
               const LabelSet& R2) {
    FlipSets f = flip_sets(L1, R1, L2, R2);
    QPoly odd_m = prod_fact(1, m + a, 2, -1), odd_n = prod_fact(1, n + a, 2, -1);
    QRat r(odd_m * odd_m, odd_n * odd_n);
    r = r * QRat(prod_fact(1, 2 * n + b - 1, 1, 0), prod_fact(1, 2 * m + b - 1, 1, 0));
    // square root of prod_{L2}<2|z|>/4 over prod_{L1}<2|z|>/4, taken over the flip sets
    FactoredRatio rad;
    for (int z : f.rflip) rad.num.push_back(q_int(std::abs(z)).scaled(mpq_class(1, 4)));
    for (int z : f.lflip) rad.den.push_back(q_int(std::abs(z)).scaled(mpq_class(1, 4)));
    r = r * sqrt_perfect(rad);
    return r * delta_ratio(L1, R1, L2, R2);
}

QRat thm32_rhs(int m, int n, int a, int b, const LabelSet& L1, const LabelSet& R1, const LabelSet& L2,
               const LabelSet& R2) {
    FlipSets f = flip_sets(L1, R1, L2, R2);
    QPoly ev_m = prod_fact(1, m + a + 1, 2, -2), ev_n = prod_fact(1, n + a + 1, 2, -2);
    QRat r(ev_m * ev_m, ev_n * ev_n);
    r = r * QRat(prod_fact(1, 2 * n + b - 1, 1, 0), prod_fact(1, 2 * m + b - 1, 1, 0));
    FactoredRatio rad;
    for (int s : f.lflip) rad.num.push_back(q_int(std::abs(s)));
    for (int s : f.rflip) rad.den.push_back(q_int(std::abs(s)));
    r = r * sqrt_perfect(rad);
    return r * delta_ratio(L1, R1, L2, R2);
}

QRat flip_ratio(const HSpec& from, const HSpec& to) {
    if (from.prime != to.prime || from.m != to.n || from.n != to.m || from.a != to.a || from.b != to.b ||
        from.c != to.c)
        throw spec_error("specs are not related by a flip");
    auto fn = from.prime ? thm32_rhs : thm31_rhs;
    return fn(from.m, from.n, from.a, from.b, from.L1, from.R1, to.L1, to.R1);
}

QRat thm34_rhs(const FamilySpec& fs, Thm34Variant v) {
    Thm34Instance I = thm34_instance(fs, v);
    return flip_ratio(I.num, I.den).inverse();
}

QRat thm34_lhs(const FamilySpec& fs) {
    Caps caps = caps_from_env();
    int cap = std::max(caps.dp, 128);
    QPoly mf = tgf_dp(family_region(fs), cap);
    QPoly mc = tgf_dp(family_collapsed(fs), cap);
    return QRat(mf * fern_weight(family_fern(fs)), mc * fern_weight(collapsed_fern(fs)));
}

}  // namespace tilinglab
