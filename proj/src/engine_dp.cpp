// Strip-by-strip transfer over the dual matching problem.
//
// Strips are swept left to right and, inside a strip, triangles bottom to
// top. The profile holds one bit per pos: for a right-pointing position it
// means "already covered by a horizontal lozenge from the previous strip".
// Bit 127 is the carry: the previous triangle in this strip waits to pair
// with the current one.
#include "tilinglab/engine.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <unordered_map>

namespace tilinglab {

namespace {

using Mask = unsigned __int128;
constexpr int kCarry = 127;
const Mask kCarryBit = Mask(1) << kCarry;

struct MaskHash {
    std::size_t operator()(Mask m) const {
        auto lo = std::uint64_t(m), hi = std::uint64_t(m >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
        return std::size_t(h ^ (h >> 29));
    }
};

struct Geometry {
    int cmin = 0, cmax = -1, pmin = 0;
    std::map<int, std::pair<int, int>> strip;  // col -> pos range
};

Geometry geometry(const Region& r, int cap) {
    Geometry g;
    if (r.tris.empty()) return g;
    int pmin = INT_MAX, pmax = INT_MIN;
    std::map<int, int> per;
    for (const Tri& t : r.tris) {
        pmin = std::min(pmin, t.pos);
        pmax = std::max(pmax, t.pos);
        auto [it, fresh] = g.strip.try_emplace(t.col, t.pos, t.pos);
        if (!fresh) {
            it->second.first = std::min(it->second.first, t.pos);
            it->second.second = std::max(it->second.second, t.pos);
        }
        ++per[t.col];
    }
    int widest = 0;
    for (auto [c, k] : per) widest = std::max(widest, k);
    if (widest > cap)
        throw cap_exceeded("profile engine cap exceeded: strip with " + std::to_string(widest) +
                           " triangles > " + std::to_string(cap));
    if (pmax - pmin + 1 > kCarry) throw cap_exceeded("profile engine: region taller than 127 rows");
    g.cmin = g.strip.begin()->first;
    g.cmax = g.strip.rbegin()->first;
    g.pmin = pmin;
    return g;
}

// Ops must provide: V zero(); V one(); void add(V&, const V&);
// void add_weighted(V& dst, const V& src, int offset).
template <class Ops>
typename Ops::V run(const Region& r, Ops& ops, int cap) {
    using V = typename Ops::V;
    Geometry g = geometry(r, cap);
    if (r.tris.empty()) return ops.one();
    if (balance(r) != 0) return ops.zero();
    std::unordered_map<Mask, V, MaskHash> cur, next;
    cur.emplace(Mask(0), ops.one());
    auto put = [&](Mask m, const V& v) {
        auto it = next.find(m);
        if (it == next.end()) next.emplace(m, v);
        else ops.add(it->second, v);
    };
    auto put_w = [&](Mask m, const V& v, int off) {
        auto it = next.find(m);
        if (it == next.end()) it = next.emplace(m, ops.zero()).first;
        ops.add_weighted(it->second, v, off);
    };
    for (int c = g.cmin; c <= g.cmax; ++c) {
        auto sit = g.strip.find(c);
        if (sit == g.strip.end()) {
            // an empty strip: no horizontal lozenge may cross it
            for (auto& [m, v] : cur)
                if (m != 0) return ops.zero();
            continue;
        }
        auto [lo, hi] = sit->second;
        for (int p = lo; p <= hi; ++p) {
            Tri t = Tri::at(c, p);
            const Mask bit = Mask(1) << (p - g.pmin);
            next.clear();
            if (!r.contains(t)) {
                for (auto& [m, v] : cur)
                    if (!(m & kCarryBit) && !(m & bit)) put(m, v);
            } else if (!t.left()) {
                const Tri below = Tri::at(c, p - 1), above = Tri::at(c, p + 1);
                const bool from_below = r.contains(below) && !r.barred(Edge{below, Dir::Up});
                const bool to_above = r.contains(above) && !r.barred(Edge{above, Dir::Down});
                for (auto& [m, v] : cur) {
                    bool carry = m & kCarryBit;
                    if (m & bit) {
                        if (!carry) put(m & ~bit, v);
                    } else if (carry) {
                        if (from_below) put(m & ~kCarryBit, v);
                    } else if (to_above) {
                        put(m | kCarryBit, v);
                    }
                }
            } else {
                const Tri right = Tri::at(c + 1, p), above = Tri::at(c, p + 1);
                const bool down_ok = !r.barred(Edge{t, Dir::Down});
                const bool horiz = r.contains(right) && !r.barred(Edge{t, Dir::Horizontal});
                const bool up = r.contains(above) && !r.barred(Edge{t, Dir::Up});
                const int off = p - r.frame.axis_offset2;
                for (auto& [m, v] : cur) {
                    if (m & bit) continue;
                    if (m & kCarryBit) {
                        if (down_ok) put(m & ~kCarryBit, v);
                        continue;
                    }
                    if (horiz) put_w(m | bit, v, off);
                    if (up) put(m | kCarryBit, v);
                }
            }
            std::swap(cur, next);
            if (cur.empty()) return ops.zero();
        }
    }
    auto it = cur.find(Mask(0));
    return it == cur.end() ? ops.zero() : it->second;
}

struct CountOps {
    using V = mpz_class;
    V zero() { return 0; }
    V one() { return 1; }
    void add(V& d, const V& s) { d += s; }
    void add_weighted(V& d, const V& s, int) { d += s; }
};

struct MaxOps {
    using V = long;
    static constexpr long kNone = LONG_MIN / 4;
    V zero() { return kNone; }
    V one() { return 0; }
    void add(V& d, const V& s) { d = std::max(d, s); }
    void add_weighted(V& d, const V& s, int off) {
        if (s != kNone) d = std::max(d, s + std::abs(off));
    }
};

// Dense Laurent polynomial with integer coefficients.
struct Dense {
    int lo = 0;
    std::vector<mpz_class> c;

    void add_shifted(const Dense& s, int shift, const mpz_class* mult) {
        if (s.c.empty()) return;
        int slo = s.lo + shift, shi = slo + int(s.c.size());
        if (c.empty()) {
            lo = slo;
            c.assign(s.c.size(), 0);
        } else if (slo < lo || shi > lo + int(c.size())) {
            int nlo = std::min(lo, slo), nhi = std::max(lo + int(c.size()), shi);
            std::vector<mpz_class> nc(nhi - nlo);
            for (std::size_t i = 0; i < c.size(); ++i) nc[lo - nlo + i].swap(c[i]);
            c.swap(nc);
            lo = nlo;
        }
        mpz_class* base = c.data() + (slo - lo);
        if (mult)
            for (std::size_t i = 0; i < s.c.size(); ++i) mpz_addmul(base[i].get_mpz_t(), s.c[i].get_mpz_t(), mult->get_mpz_t());
        else
            for (std::size_t i = 0; i < s.c.size(); ++i) base[i] += s.c[i];
    }
};

// Values indexed by the X-exponent (a single slot unless symbolic).
struct PolyOps {
    using V = std::vector<Dense>;
    WeightMode mode;
    mpz_class xn = 1, yn = 1;
    V zero() { return {}; }
    V one() {
        Dense d;
        d.c.push_back(1);
        return {d};
    }
    void add(V& d, const V& s) {
        if (d.size() < s.size()) d.resize(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) d[i].add_shifted(s[i], 0, nullptr);
    }
    void add_weighted(V& d, const V& s, int off) {
        if (mode == WeightMode::SymbolicXY) {
            if (d.size() < s.size() + 1) d.resize(s.size() + 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                d[i + 1].add_shifted(s[i], off, nullptr);
                d[i].add_shifted(s[i], -off, nullptr);
            }
            return;
        }
        if (d.empty()) d.resize(1);
        if (s.empty()) return;
        if (mode == WeightMode::Standard) {
            d[0].add_shifted(s[0], off, nullptr);
            d[0].add_shifted(s[0], -off, nullptr);
        } else {
            d[0].add_shifted(s[0], off, &xn);
            d[0].add_shifted(s[0], -off, &yn);
        }
    }
};

struct PointOps {
    using V = std::vector<mpz_class>;
    std::size_t k = 0;
    int n0 = 0;
    std::vector<std::vector<mpz_class>> w;  // [off + n0][point]
    V zero() { return V(k); }
    V one() { return V(k, 1); }
    void add(V& d, const V& s) {
        for (std::size_t i = 0; i < k; ++i) d[i] += s[i];
    }
    void add_weighted(V& d, const V& s, int off) {
        const auto& ww = w[off + n0];
        for (std::size_t i = 0; i < k; ++i) mpz_addmul(d[i].get_mpz_t(), s[i].get_mpz_t(), ww[i].get_mpz_t());
    }
};

// Integer scaling of X and Y weights: x0 = xn/d, y0 = yn/d.
void numeric_scale(const WeightFrame& f, mpz_class& xn, mpz_class& yn, mpz_class& d) {
    if (f.mode != WeightMode::NumericXY) {
        xn = yn = d = 1;
        return;
    }
    mpz_lcm(d.get_mpz_t(), f.x0.get_den_mpz_t(), f.y0.get_den_mpz_t());
    mpq_class xs = f.x0 * d, ys = f.y0 * d;
    xn = xs.get_num();
    yn = ys.get_num();
}

}  // namespace

mpz_class count_tilings(const Region& r, int cap) {
    CountOps ops;
    return run(r, ops, cap);
}

int exponent_bound(const Region& r, int cap) {
    MaxOps ops;
    long v = run(r, ops, cap);
    return v == MaxOps::kNone ? -1 : int(v);
}

QPoly tgf_dp(const Region& r, int cap) {
    PolyOps ops;
    ops.mode = r.frame.mode;
    mpz_class d;
    numeric_scale(r.frame, ops.xn, ops.yn, d);
    auto v = run(r, ops, cap);
    auto h = horizontal_count(r);
    QPoly out;
    if (!h) return out;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), mpz_class(2 * d).get_mpz_t(), unsigned(*h));
    for (std::size_t ix = 0; ix < v.size(); ++ix) {
        const Dense& dn = v[ix];
        for (std::size_t i = 0; i < dn.c.size(); ++i) {
            if (dn.c[i] == 0) continue;
            Mono m{dn.lo + int(i), 0, 0};
            if (r.frame.mode == WeightMode::SymbolicXY) {
                m.x = int(ix);
                m.y = *h - int(ix);
            }
            mpq_class coef(dn.c[i], scale);
            coef.canonicalize();
            out.add_term(m, coef);
        }
    }
    return out;
}

std::vector<mpq_class> tgf_points(const Region& r, const std::vector<long>& q0s, int cap) {
    if (r.frame.mode == WeightMode::SymbolicXY)
        throw std::invalid_argument("point evaluation needs numeric X and Y");
    PointOps ops;
    ops.k = q0s.size();
    for (const Tri& t : r.tris) ops.n0 = std::max(ops.n0, std::abs(t.pos - r.frame.axis_offset2));
    mpz_class xn, yn, d;
    numeric_scale(r.frame, xn, yn, d);
    ops.w.assign(2 * ops.n0 + 1, std::vector<mpz_class>(ops.k));
    for (std::size_t i = 0; i < ops.k; ++i) {
        if (q0s[i] == 0) throw std::invalid_argument("evaluation point q0 = 0");
        mpz_class q0 = q0s[i];
        for (int off = -ops.n0; off <= ops.n0; ++off) {
            mpz_class a, b;
            mpz_pow_ui(a.get_mpz_t(), q0.get_mpz_t(), unsigned(ops.n0 + off));
            mpz_pow_ui(b.get_mpz_t(), q0.get_mpz_t(), unsigned(ops.n0 - off));
            ops.w[off + ops.n0][i] = xn * a + yn * b;
        }
    }
    auto v = run(r, ops, cap);
    std::vector<mpq_class> out(ops.k, 0);
    auto h = horizontal_count(r);
    if (!h || v.empty()) return out;
    for (std::size_t i = 0; i < ops.k; ++i) {
        mpz_class q0 = q0s[i], s1, s2;
        mpz_pow_ui(s1.get_mpz_t(), mpz_class(2 * d).get_mpz_t(), unsigned(*h));
        mpz_pow_ui(s2.get_mpz_t(), q0.get_mpz_t(), unsigned(ops.n0 * *h));
        out[i] = mpq_class(v[i], s1 * s2);
        out[i].canonicalize();
    }
    return out;
}

TGFResult tgf(const Region& r, Method m) {
    TGFResult res;
    res.method = m;
    switch (m) {
        case Method::DFS: res.value = tgf_dfs(r); break;
        case Method::ProfileDP: res.value = tgf_dp(r); break;
        case Method::DiagonalSplit: throw std::invalid_argument("diagonal split needs an intrusion-hexagon spec");
    }
    res.tilings_at_q1 = eval_at(res.value, 1);
    return res;
}

}  // namespace tilinglab
