#include "tilinglab/engine.hpp"
#include "tilinglab/formulas.hpp"

#include <functional>

namespace tilinglab {

QPoly diagonal_split_tgf(const HSpec& s) {
    s.validate();
    const int need = 2 * s.m + 2 * s.a + (s.prime ? 2 : 0) - int(s.L1.size());
    if (need < 0) return QPoly();
    std::vector<Label2> cand;
    for (Label2 l : s.labels())
        if (l != 0 && !s.L1.count(l) && !s.R1.count(l) && !s.B.count(l)) cand.push_back(l);
    if (need > int(cand.size())) return QPoly();
    {
        // guard against huge subset sums
        mpz_class choose;
        mpz_bin_uiui(choose.get_mpz_t(), cand.size(), unsigned(need));
        if (choose > 2000000) throw cap_exceeded("diagonal split: too many crossing sets");
    }
    const int half = s.m + s.a;
    const int sx = 2 * s.m + 2 * s.a + 2 * s.c - s.b + (s.prime ? 2 : 1);
    const int sy = 2 * s.n + s.b;
    auto piece = [&](const LabelSet& z) {
        return s.prime ? lemma42_R_odd(s.n + s.c, half, z) : lemma42_R_even(s.n + s.c, half, z);
    };
    int lneg = 0, lpos = 0;
    for (Label2 l : s.L1) (l < 0 ? lneg : lpos)++;
    const int want_side = s.prime ? half + 1 : half;

    QPoly total;
    std::vector<int> pick(need);
    // lexicographic walk over need-subsets of cand
    std::function<void(int, int)> walk = [&](int start, int depth) {
        if (depth == need) {
            int cn = 0;
            for (int i : pick) cn += cand[i] < 0;
            if (lneg + cn != want_side || lpos + (need - cn) != want_side) return;
            LabelSet lo, hi, right = s.R1;
            QPoly w(1);
            for (Label2 l : s.L1) (l < 0 ? lo : hi).insert(std::abs(l));
            for (int i : pick) {
                Label2 l = cand[i];
                (l < 0 ? lo : hi).insert(std::abs(l));
                right.insert(l);
                w *= q_plus(l);
            }
            QPoly t = lemma41_S(sx, sy, right);
            if (t.is_zero()) return;
            t *= piece(lo);
            if (t.is_zero()) return;
            t *= piece(hi);
            total += w * t;
            return;
        }
        for (int i = start; i <= int(cand.size()) - (need - depth); ++i) {
            pick[depth] = i;
            walk(i + 1, depth + 1);
        }
    };
    walk(0, 0);
    return total;
}

}  // namespace tilinglab
