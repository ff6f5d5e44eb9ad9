#include "tilinglab/verify.hpp"

#include "tilinglab/engine.hpp"
#include "tilinglab/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace tilinglab {

namespace {

using Status = InstanceResult::Status;

int verify_cap() { return std::max(caps_from_env().dp, 128); }

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }
int draw_in(std::mt19937_64& rng, int lo, int hi) { return lo + int(draw(rng, std::uint64_t(hi - lo + 1))); }

template <class T>
void shuffle_det(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

InstanceResult pass() { return {}; }
InstanceResult fail(std::string l, std::string r) { return {Status::Fail, std::move(l), std::move(r), {}}; }
InstanceResult skip(std::string why) { return {Status::Skip, std::move(why), "", {}}; }

InstanceResult compare(const QPoly& l, const QPoly& r) { return l == r ? pass() : fail(l.str(), r.str()); }

std::vector<long> point_list(int k) {
    std::vector<long> p;
    for (int i = 0; int(p.size()) < k; ++i) {
        p.push_back(i + 1);
        if (int(p.size()) < k) p.push_back(-(i + 1));
    }
    return p;
}

std::set<int> int_set(const json& j) {
    std::set<int> s;
    for (const json& v : j) s.insert(v.get<int>());
    return s;
}

std::vector<std::set<int>> subsets_of_size(int n, int k) {
    std::vector<std::set<int>> out;
    if (k < 0 || k > n) return out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) {
            std::set<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.insert(i);
            out.push_back(s);
        }
    return out;
}

// Engine region against a closed form, symbolic or at points.
InstanceResult engine_vs(const Region& r, const QPoly& closed, const EqMode& mode) {
    if (mode.points && r.frame.mode != WeightMode::SymbolicXY) {
        PointsOutcome o = points_equal(Side{{r}, QPoly(1)}, Side{{}, closed}, mode.n);
        InstanceResult res = o.equal ? pass() : fail("engine at points", closed.str());
        res.extra = {{"points", o.points}};
        return res;
    }
    return compare(tgf_dp(r, verify_cap()), closed);
}

// ---------------------------------------------------------------- suites

json macmahon_case(int a, int b, int c) { return {{"a", a}, {"b", b}, {"c", c}}; }

InstanceResult run_macmahon(const json& in, const EqMode&) {
    int a = in.at("a"), b = in.at("b"), c = in.at("c");
    Region h = hexagon(a, b, c);
    mpq_class want = macmahon(a, b, c);
    mpq_class count(count_tilings(h, verify_cap()));
    mpq_class at1 = eval_at(tgf_dp(h, verify_cap()), 1);
    if (count != want || at1 != want)
        return fail("count " + count.get_str() + ", tgf(1) " + at1.get_str(), want.get_str());
    return pass();
}

InstanceResult run_lemma41(const json& in, const EqMode& mode) {
    int x = in.at("x"), y = in.at("y");
    LabelSet Z = int_set(in.at("Z"));
    return engine_vs(trapezoid_S(x, y, Z), lemma41_S(x, y, Z), mode);
}

InstanceResult run_lemma42(const json& in, const EqMode& mode) {
    int x = in.at("x"), y = in.at("y");
    LabelSet Z = int_set(in.at("Z"));
    if (in.at("parity") == "even") return engine_vs(quarter_R_even(x, y, Z), lemma42_R_even(x, y, Z), mode);
    return engine_vs(quarter_R_odd(x, y, Z), lemma42_R_odd(x, y, Z), mode);
}

InstanceResult run_thmA1(const json& in, const EqMode& mode) {
    int x = in.at("x"), y = in.at("y"), k = in.at("k");
    std::set<int> W = int_set(in.at("W"));
    QPoly closed = thmA1_S(x, y, W, k);
    if (!in.contains("X")) return compare(tgf_dp(trapezoid_S_bar(x, y, W, k), verify_cap()), closed);
    mpq_class X0(in.at("X").get<std::string>()), Y0(in.at("Y").get<std::string>());
    X0.canonicalize();
    Y0.canonicalize();
    return engine_vs(trapezoid_S_bar(x, y, W, k, WeightFrame::numeric(0, X0, Y0)), closed.subst_xy(X0, Y0), mode);
}

struct KuoTerms {
    std::set<int> W2, W3, W4, W5, W6;
    int l = 0, j = 0;
};

// Dent substitutions of the six-term recurrence; W needs 1 and x+y, and a
// gap below the top cluster.
KuoTerms kuo_terms(int x, int y, const std::set<int>& W) {
    const int n = x + y;
    if (int(W.size()) != y || !W.count(1) || !W.count(n)) throw spec_error("kuo: W must have y elements including 1 and x+y");
    KuoTerms t;
    while (W.count(n - t.l)) ++t.l;
    if (y - t.l <= 0 || x <= 0) throw spec_error("kuo: needs x > 0 and a gap below the top dent cluster");
    t.j = 1;
    while (W.count(t.j + 1)) ++t.j;
    auto edit = [&](std::vector<int> add, std::vector<int> rm) {
        std::set<int> s = W;
        for (int r : rm) s.erase(r);
        for (int a : add) s.insert(a);
        return s;
    };
    t.W2 = edit({n - t.l}, {t.j, n});
    t.W3 = edit({}, {t.j});
    t.W4 = edit({n - t.l}, {n});
    t.W5 = edit({n - t.l}, {t.j});
    t.W6 = edit({}, {n});
    return t;
}

InstanceResult run_kuo(const json& in, const EqMode&) {
    int x = in.at("x"), y = in.at("y"), k = in.at("k");
    std::set<int> W = int_set(in.at("W"));
    KuoTerms t = kuo_terms(x, y, W);
    const int cap = verify_cap();
    auto M = [&](int xx, int yy, const std::set<int>& w, int kk) { return tgf_dp(trapezoid_S_bar(xx, yy, w, kk), cap); };
    QPoly l = M(x, y, W, k) * M(x, y - 1, t.W2, k - 1);
    QPoly r = M(x + 1, y - 1, t.W3, k) * M(x - 1, y, t.W4, k - 1) + M(x, y, t.W5, k) * M(x, y - 1, t.W6, k - 1);
    if (l.is_zero()) return fail("left side vanished", r.str());
    return compare(l, r);
}

InstanceResult run_corA3(const json& in, const EqMode&) {
    int a = in.at("a"), b = in.at("b"), c = in.at("c"), k = in.at("k");
    return compare(tgf_dp(hexagon(a, b, c, WeightFrame::symbolic(-k)), verify_cap()), corA3_hex(a, b, c, k));
}

// M(to)/M(from) against the closed form.
InstanceResult flip_check(const HSpec& from, const HSpec& to, const EqMode& mode) {
    QRat closed = flip_ratio(from, to);
    Region rf = hex_intrusion(from), rt = hex_intrusion(to);
    if (mode.points) {
        PointsOutcome o = points_equal(Side{{rt}, closed.den()}, Side{{rf}, closed.num()}, mode.n);
        InstanceResult res = o.equal ? pass() : fail("engine ratio at points", closed.str());
        res.extra = {{"points", o.points}};
        return res;
    }
    QPoly mf = tgf_dp(rf, verify_cap()), mt = tgf_dp(rt, verify_cap());
    if (mf.is_zero() || mt.is_zero()) return skip("vanishing generating function");
    QRat lhs(mt, mf);
    return lhs == closed ? pass() : fail(lhs.str(), closed.str());
}

InstanceResult run_flip(const json& in, const EqMode& mode) {
    FlipInstance f = flip_from_json(in);
    if (count_tilings(hex_intrusion(f.from), verify_cap()) == 0) return skip("vanishing generating function");
    return flip_check(f.from, f.to(), mode);
}

InstanceResult run_remark33(const json& in, const EqMode& mode) {
    FlipInstance f = flip_from_json(in);
    std::vector<std::string> bad;
    int used = 0;
    std::string first;
    for (const json& bj : in.at("barrier_sets")) {
        FlipInstance g = f;
        g.from.B = labels_from_json(bj);
        g.from.validate();
        if (count_tilings(hex_intrusion(g.from), verify_cap()) == 0) continue;
        InstanceResult r = flip_check(g.from, g.to(), mode);
        if (r.status == Status::Skip) continue;
        ++used;
        if (r.status == Status::Fail) bad.push_back("B=" + bj.dump() + ": " + r.lhs);
    }
    if (used < 2) return skip("fewer than two nonvanishing barrier sets");
    if (!bad.empty()) {
        std::string all;
        for (auto& s : bad) all += s + "; ";
        return fail(all, flip_ratio(f.from, f.to()).str());
    }
    InstanceResult ok = pass();
    ok.extra = {{"barrier_sets", used}};
    return ok;
}

// Thm 3.4 with the resolved variant; other variants are reported in extra.
Thm34Variant variant_from_name(const std::string& n) {
    for (Thm34Variant c : {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY})
        if (variant_name(c) == n) return c;
    throw spec_error("unknown variant '" + n + "'");
}

InstanceResult run_thm34(const json& in, const EqMode& mode) {
    FamilySpec fs = family_from_json(in);
    Thm34Variant main = resolved_variant(fs.family);
    // a witness may pin the variant under test
    if (in.contains("variant")) main = variant_from_name(in.at("variant").get<std::string>());
    std::vector<Thm34Variant> vars{main};
    if (in.contains("variants"))
        for (const json& v : in.at("variants"))
            for (Thm34Variant c : {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY})
                if (variant_name(c) == v.get<std::string>() && c != main) vars.push_back(c);

    Region rf = family_region(fs), rc = family_collapsed(fs);
    QPoly wF = fern_weight(family_fern(fs)), wC = fern_weight(collapsed_fern(fs));
    QPoly mf, mc;
    if (!mode.points) {
        mf = tgf_dp(rf, verify_cap());
        mc = tgf_dp(rc, verify_cap());
        if (mf.is_zero() || mc.is_zero()) return skip("vanishing generating function");
    }
    InstanceResult out = pass();
    json per = json::object();
    for (Thm34Variant v : vars) {
        bool ok = false, differs = v != main;
        std::string lhs_s, rhs_s;
        try {
            Thm34Instance I = thm34_instance(fs, v);
            if (v != main) {
                Thm34Instance M = thm34_instance(fs, main);
                differs = !(I.num == M.num && I.den == M.den);
            }
            QRat rhs = flip_ratio(I.num, I.den).inverse();
            rhs_s = rhs.str();
            if (mode.points) {
                PointsOutcome o = points_equal(Side{{rf}, wF * rhs.den()}, Side{{rc}, wC * rhs.num()}, mode.n);
                ok = o.equal;
                lhs_s = "engine at " + std::to_string(o.points) + " points";
                if (v == main) out.extra["points"] = o.points;
            } else {
                QRat lhs(mf * wF, mc * wC);
                ok = lhs == rhs;
                lhs_s = lhs.str();
            }
        } catch (const std::invalid_argument& e) {
            lhs_s = std::string("construction failed: ") + e.what();
        } catch (const not_square_error& e) {
            lhs_s = std::string("square root failed: ") + e.what();
        }
        if (v == main) {
            if (!ok) out = fail(lhs_s, rhs_s);
        }
        per[variant_name(v)] = {{"pass", ok}, {"differs", differs}};
    }
    out.extra["variants"] = per;
    out.extra["resolved"] = variant_name(main);
    out.extra["ycase"] = ycase_name(ycase_of(fs));
    return out;
}

InstanceResult run_peel(const json& in, const EqMode&) {
    FamilySpec fs = family_from_json(in);
    FernSpec f = family_fern(fs), fb = f;
    fb.flipped = !fb.flipped;
    if (fern_weight(f) != fern_weight(fb)) return fail(fern_weight(f).str(), fern_weight(fb).str());
    std::string why;
    if (!peel_consistent(fs, resolved_variant(fs.family), &why)) return fail(why, "consistent peel");
    return pass();
}

LabelSet neg(const LabelSet& s) {
    LabelSet r;
    for (int v : s) r.insert(-v);
    return r;
}

LabelSet uni(const LabelSet& a, const LabelSet& b) {
    LabelSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

InstanceResult run_delta(const json& in, const EqMode&) {
    int id = in.at("identity");
    LabelSet B = int_set(in.value("B", json::array())), C = int_set(in.value("C", json::array())),
             D = int_set(in.value("D", json::array())), R = int_set(in.value("R", json::array()));
    switch (id) {
        case 1: return compare(delta_11(uni(B, C)), delta_11(B) * delta_12(B, C) * delta_11(C));
        case 2: return compare(delta_12(uni(B, C), D), delta_12(B, D) * delta_12(C, D));
        case 3: return compare(delta_21(uni(B, C)), delta_21(B) * delta_22(B, C) * delta_21(C));
        case 4: return compare(delta_22(uni(B, C), D), delta_22(B, D) * delta_22(C, D));
        case 5: {
            QPoly r = delta_21(B).pow(2);
            for (int b : B) r *= q_int(b);
            return compare(delta_11(uni(B, neg(B))), r);
        }
        case 6: return compare(delta_12(uni(C, R), uni(B, neg(B))), delta_22(C, B) * delta_22(neg(R), B));
        case 7: {
            int n = in.at("n");
            return compare(q_plus(n) * q_int(n), q_int(2 * n).scaled(mpq_class(1, 2)));
        }
    }
    throw spec_error("unknown identity " + std::to_string(id));
}

InstanceResult run_agreement(const json& in, const EqMode&) {
    if (in.contains("hspec")) {
        HSpec s = hspec_from_json(in.at("hspec"));
        Region r = hex_intrusion(s);
        QPoly dp = tgf_dp(r, verify_cap());
        QPoly split = diagonal_split_tgf(s);
        if (dp != split) return fail("dp " + dp.str(), "split " + split.str());
        if (int(r.tris.size()) <= caps_from_env().dfs) {
            QPoly d = tgf_dfs(r, caps_from_env().dfs);
            if (d != dp) return fail("dfs " + d.str(), "dp " + dp.str());
        }
        InstanceResult ok = pass();
        ok.extra = {{"nonzero", !dp.is_zero()}};
        return ok;
    }
    Region r = region_from_json(in.at("region"));
    QPoly d = tgf_dfs(r, std::max(caps_from_env().dfs, 40));
    QPoly p = tgf_dp(r, verify_cap());
    InstanceResult res = d == p ? pass() : fail("dfs " + d.str(), "dp " + p.str());
    res.extra = {{"nonzero", !p.is_zero()}};
    return res;
}

// ------------------------------------------------------------ generators

int def(int v, int d) { return v < 0 ? d : v; }

std::vector<json> gen_macmahon(const SuiteConfig& c) {
    std::vector<json> out;
    int m = def(c.max, 4);
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b)
            for (int cc = 0; cc <= m; ++cc) out.push_back(macmahon_case(a, b, cc));
    return out;
}

std::vector<json> gen_lemma41(const SuiteConfig& c) {
    std::vector<json> out;
    int m = def(c.max, 9);
    for (int n = 0; n <= m; ++n)
        for (int y = 0; y <= n; ++y)
            for (auto& s : subsets_of_size(n, y)) {
                LabelSet Z;
                for (int i : s) Z.insert(2 * i - (n - 1));
                out.push_back({{"x", n - y}, {"y", y}, {"Z", labels_to_json(Z)}});
            }
    std::mt19937_64 rng(c.seed);
    int want = def(c.samples, 100), got = 0;
    while (got < want) {
        // y = 0 is a flat strip with no dent positions
        int n = draw_in(rng, 1, m), y = draw_in(rng, 1, n);
        LabelSet Z;
        for (int i = 0; i < n; ++i)
            if (draw(rng, 2)) Z.insert(2 * i - (n - 1));
        if (int(Z.size()) == y) continue;
        out.push_back({{"x", n - y}, {"y", y}, {"Z", labels_to_json(Z)}, {"cardinality", "wrong"}});
        ++got;
    }
    return out;
}

std::vector<json> gen_lemma42(const SuiteConfig& c) {
    std::vector<json> out;
    int m = def(c.max, 7);
    for (int n = 0; n <= m; ++n)
        for (int y = 0; y <= n; ++y) {
            for (auto& s : subsets_of_size(n, y)) {
                LabelSet Z;
                for (int i : s) Z.insert(2 * (i + 1));
                out.push_back({{"parity", "even"}, {"x", n - y}, {"y", y}, {"Z", labels_to_json(Z)}});
            }
            for (auto& s : subsets_of_size(n + 1, y + 1)) {
                LabelSet Z;
                for (int i : s) Z.insert(2 * i + 1);
                out.push_back({{"parity", "odd"}, {"x", n - y}, {"y", y}, {"Z", labels_to_json(Z)}});
            }
        }
    return out;
}

std::vector<json> gen_thmA1(const SuiteConfig& c) {
    std::vector<json> out;
    int m = def(c.max, 6);
    for (int n = 0; n <= m; ++n)
        for (int y = 0; y <= n; ++y)
            for (auto& s : subsets_of_size(n, y)) {
                json W = json::array();
                for (int i : s) W.push_back(i + 1);
                json base{{"x", n - y}, {"y", y}, {"W", W}};
                for (int k : {0, 1, -2}) {
                    json j = base;
                    j["k"] = k;
                    out.push_back(j);
                }
                const char* spec[3][3] = {{"1", "1", "0"}, {"2", "3", "1"}, {"1", "0", "-2"}};
                for (auto& sp : spec) {
                    json j = base;
                    j["X"] = sp[0];
                    j["Y"] = sp[1];
                    j["k"] = std::stoi(sp[2]);
                    out.push_back(j);
                }
            }
    return out;
}

std::vector<json> gen_kuo(const SuiteConfig& c) {
    std::vector<json> out;
    std::mt19937_64 rng(c.seed);
    int m = def(c.max, 7), want = def(c.samples, 40);
    for (int tries = 0; int(out.size()) < want && tries < 100000; ++tries) {
        int n = draw_in(rng, 3, m), y = draw_in(rng, 2, n - 1), x = n - y;
        std::set<int> W{1, n};
        std::vector<int> mid;
        for (int i = 2; i < n; ++i) mid.push_back(i);
        shuffle_det(mid, rng);
        for (int i = 0; i < y - 2; ++i) W.insert(mid[i]);
        try {
            kuo_terms(x, y, W);
        } catch (const spec_error&) {
            continue;
        }
        json j{{"x", x}, {"y", y}, {"W", std::vector<int>(W.begin(), W.end())}, {"k", draw_in(rng, -2, 2)}};
        if (std::find(out.begin(), out.end(), j) == out.end()) out.push_back(j);
    }
    return out;
}

std::vector<json> gen_corA3(const SuiteConfig& c) {
    std::vector<json> out;
    int m = def(c.max, 3);
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b)
            for (int cc = 0; cc <= m; ++cc)
                for (int k : {-1, 0, 2}) out.push_back({{"a", a}, {"b", b}, {"c", cc}, {"k", k}});
    return out;
}

std::vector<json> gen_flip_suite(const SuiteConfig& c, bool prime) {
    std::vector<json> out;
    for (auto& f : gen_flip_instances(prime, def(c.max, 4), def(c.samples, 50), c.seed)) out.push_back(flip_to_json(f));
    return out;
}

std::vector<json> gen_remark33(const SuiteConfig& c) {
    std::vector<json> out;
    int want = def(c.samples, 10), cap = def(c.max, 4);
    std::mt19937_64 rng(c.seed);
    for (std::uint64_t round = 0; int(out.size()) < want && round < 400; ++round) {
        bool prime = (out.size() + round) % 2 == 1;
        auto fl = gen_flip_instances(prime, cap, 1, c.seed * 7919 + round);
        if (fl.empty()) continue;
        FlipInstance f = fl[0];
        f.from.B.clear();
        std::vector<Label2> free;
        for (Label2 l : f.from.labels())
            if (!f.from.L1.count(l) && !f.from.R1.count(l)) free.push_back(l);
        if (free.empty()) continue;
        json sets = json::array();
        sets.push_back(json::array());
        std::set<LabelSet> seen{{}};
        for (int t = 0; sets.size() < 5 && t < 200; ++t) {
            FlipInstance g = f;
            for (Label2 l : free)
                if (draw(rng, 3) == 0) g.from.B.insert(l);
            if (seen.count(g.from.B)) continue;
            try {
                g.from.validate();
                if (count_tilings(hex_intrusion(g.from), verify_cap()) == 0) continue;
                if (count_tilings(hex_intrusion(g.to()), verify_cap()) == 0) continue;
            } catch (const std::exception&) {
                continue;
            }
            seen.insert(g.from.B);
            sets.push_back(labels_to_json(g.from.B));
        }
        if (sets.size() < 5) continue;
        json j = flip_to_json(f);
        j["barrier_sets"] = sets;
        out.push_back(j);
    }
    return out;
}

const std::vector<std::vector<int>>& small_arms() {
    static const std::vector<std::vector<int>> a{{1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {2, 1, 1}};
    return a;
}

bool variants_differ(const FamilySpec& fs) {
    Thm34Variant m = resolved_variant(fs.family);
    for (Thm34Variant v : {Thm34Variant::Statement, Thm34Variant::ProofIndexing, Thm34Variant::CorrectedY}) {
        if (v == m) continue;
        try {
            Thm34Instance a = thm34_instance(fs, v), b = thm34_instance(fs, m);
            if (!(a.num == b.num && a.den == b.den)) return true;
        } catch (const std::exception&) {
            return true;
        }
    }
    return false;
}

std::vector<json> gen_family(const SuiteConfig& c, Family fam) {
    int m = def(c.max, 2), per = def(c.samples, 3);
    std::mt19937_64 rng(c.seed + 31 * int(fam));
    std::map<YCase, std::vector<FamilySpec>> buckets;
    for (int x = 0; x <= m; ++x)
        for (int y = 0; y <= m; ++y)
            for (int z = 0; z <= m; ++z)
                for (int w = 0; w <= z; ++w)
                    for (const auto& arms : small_arms()) {
                        FamilySpec fs{fam, x, y, z, w, arms};
                        buckets[ycase_of(fs)].push_back(fs);
                    }
    std::vector<json> out;
    json vars = json::array();
    for (Thm34Variant v : c.variants) vars.push_back(variant_name(v));
    for (auto& [yc, list] : buckets) {
        shuffle_det(list, rng);
        // instances that separate the variants first
        std::stable_partition(list.begin(), list.end(), [](const FamilySpec& fs) { return variants_differ(fs); });
        for (int i = 0; i < per && i < int(list.size()); ++i) {
            json j = family_to_json(list[i]);
            if (!vars.empty()) j["variants"] = vars;
            out.push_back(j);
        }
    }
    return out;
}

std::vector<json> gen_peel(const SuiteConfig& c) {
    std::vector<json> out;
    SuiteConfig d = c;
    d.variants.clear();
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E})
        for (json& j : gen_family(d, f)) out.push_back(j);
    return out;
}

std::vector<json> gen_delta(const SuiteConfig& c) {
    std::vector<json> out;
    std::mt19937_64 rng(c.seed);
    int want = def(c.samples, 500), range = def(c.max, 8);
    for (int i = 0; i < want; ++i) {
        int id = 1 + i % 7;
        int par = int(draw(rng, 2));
        // doubled labels of one parity; pool is symmetric around 0
        std::vector<int> pool;
        for (int v = -2 * range - par; v <= 2 * range + par; ++v)
            if ((v & 1) == par) pool.push_back(v);
        std::vector<int> pos;
        for (int v : pool)
            if (v > 0) pos.push_back(v);
        auto take = [&](std::vector<int> src, int k, LabelSet& used) {
            shuffle_det(src, rng);
            LabelSet s;
            for (int v : src)
                if (int(s.size()) < k && !used.count(v)) {
                    s.insert(v);
                    used.insert(v);
                }
            return s;
        };
        LabelSet used;
        json j{{"identity", id}};
        switch (id) {
            case 1:
                j["B"] = labels_to_json(take(pool, draw_in(rng, 0, 4), used));
                j["C"] = labels_to_json(take(pool, draw_in(rng, 0, 4), used));
                break;
            case 2:
                j["B"] = labels_to_json(take(pool, draw_in(rng, 0, 3), used));
                j["C"] = labels_to_json(take(pool, draw_in(rng, 0, 3), used));
                j["D"] = labels_to_json(take(pool, draw_in(rng, 0, 3), used));
                break;
            case 3:
                j["B"] = labels_to_json(take(pos, draw_in(rng, 0, 4), used));
                j["C"] = labels_to_json(take(pos, draw_in(rng, 0, 4), used));
                break;
            case 4:
                j["B"] = labels_to_json(take(pos, draw_in(rng, 0, 3), used));
                j["C"] = labels_to_json(take(pos, draw_in(rng, 0, 3), used));
                j["D"] = labels_to_json(take(pos, draw_in(rng, 0, 3), used));
                break;
            case 5: j["B"] = labels_to_json(take(pos, draw_in(rng, 0, 4), used)); break;
            case 6: {
                LabelSet Bp = take(pos, draw_in(rng, 0, 3), used);
                for (int v : Bp) used.insert(-v);
                std::vector<int> negs;
                for (int v : pool)
                    if (v < 0) negs.push_back(v);
                j["B"] = labels_to_json(Bp);
                j["C"] = labels_to_json(take(pos, draw_in(rng, 0, 3), used));
                j["R"] = labels_to_json(take(negs, draw_in(rng, 0, 3), used));
                break;
            }
            case 7: j["n"] = draw_in(rng, -2 * range, 2 * range); break;
        }
        out.push_back(j);
    }
    return out;
}

// Random region: a hexagon of at most 40 triangles with lozenges and
// single triangles removed, a few barriers and a random weight frame.
json random_small_region(std::mt19937_64& rng) {
    int a, b, c;
    do {
        a = draw_in(rng, 1, 4);
        b = draw_in(rng, 1, 4);
        c = draw_in(rng, 0, 4);
    } while (2 * (a * b + b * c + c * a) > 40);
    Region r = hexagon(a, b, c);
    std::vector<Tri> ts(r.tris.begin(), r.tris.end());
    int holes = draw_in(rng, 0, 3);
    for (int i = 0; i < holes && !ts.empty(); ++i) {
        Tri t = ts[draw(rng, ts.size())];
        if (!r.tris.count(t)) continue;
        r.tris.erase(t);
        auto nb = r.partners(t);
        // usually remove a whole lozenge, sometimes leave an unbalanced hole
        if (!nb.empty() && draw(rng, 4) != 0) r.tris.erase(nb[draw(rng, nb.size())]);
    }
    int bars = draw_in(rng, 0, 2);
    std::vector<Tri> lefts;
    for (const Tri& t : r.tris)
        if (t.left()) lefts.push_back(t);
    for (int i = 0; i < bars && !lefts.empty(); ++i) {
        Tri t = lefts[draw(rng, lefts.size())];
        auto nb = r.partners(t);
        if (nb.empty()) continue;
        r.barriers.insert(*edge_between(t, nb[draw(rng, nb.size())]));
    }
    json j = region_to_json(r);
    j["axis"] = draw_in(rng, -3, 3);
    switch (draw(rng, 3)) {
        case 0: break;
        case 1: j["weights"] = "symbolic"; break;
        case 2: j["weights"] = {{"X", std::to_string(draw_in(rng, 0, 3))}, {"Y", std::to_string(draw_in(rng, 1, 3)) + "/2"}}; break;
    }
    return j;
}

// One nonvanishing label configuration per parameter tuple when possible.
std::vector<HSpec> split_specs(int cap, std::uint64_t seed) {
    std::vector<HSpec> out;
    for (int prime = 0; prime < 2; ++prime)
        for (int m = 0; m <= cap; ++m)
            for (int n = 0; m + n <= cap; ++n)
                for (int a = 0; m + n + a <= cap; ++a)
                    for (int c = 0; m + n + a + c <= cap; ++c)
                        for (int b = 0; b <= 2 * a + 2 * c + 1 + prime; ++b) {
                            std::mt19937_64 rng(seed ^ (std::uint64_t(prime) << 40 | std::uint64_t(m) << 32 |
                                                        std::uint64_t(n) << 24 | std::uint64_t(a) << 16 |
                                                        std::uint64_t(c) << 8 | std::uint64_t(b)));
                            HSpec s;
                            s.prime = prime;
                            s.m = m, s.n = n, s.a = a, s.b = b, s.c = c;
                            std::optional<HSpec> best;
                            for (int t = 0; t < 60; ++t) {
                                HSpec g = s;
                                for (Label2 l : g.labels()) {
                                    int d = int(draw(rng, 6));
                                    if (d == 0 && l != 0) g.L1.insert(l);
                                    else if (d == 1) g.R1.insert(l);
                                    else if (d == 2 && draw(rng, 2)) g.B.insert(l);
                                }
                                try {
                                    g.validate();
                                    Region r = hex_intrusion(g);
                                    if (balance(r) != 0) continue;
                                    if (!best) best = g;
                                    if (count_tilings(r, verify_cap()) > 0) {
                                        best = g;
                                        break;
                                    }
                                } catch (const std::exception&) {
                                }
                            }
                            if (best) out.push_back(*best);
                        }
    return out;
}

std::vector<json> gen_agreement(const SuiteConfig& c) {
    std::vector<json> out;
    std::mt19937_64 rng(c.seed);
    for (int i = 0, n = def(c.samples, 200); i < n; ++i) out.push_back({{"region", random_small_region(rng)}});
    for (const HSpec& s : split_specs(def(c.max, 3), c.seed)) out.push_back({{"hspec", hspec_to_json(s)}});
    return out;
}

struct SuiteDef {
    std::string name;
    std::vector<json> (*gen)(const SuiteConfig&);
    InstanceResult (*run)(const json&, const EqMode&);
};

std::vector<json> gen_A(const SuiteConfig& c) { return gen_family(c, Family::A); }
std::vector<json> gen_B(const SuiteConfig& c) { return gen_family(c, Family::B); }
std::vector<json> gen_C(const SuiteConfig& c) { return gen_family(c, Family::C); }
std::vector<json> gen_D(const SuiteConfig& c) { return gen_family(c, Family::D); }
std::vector<json> gen_E(const SuiteConfig& c) { return gen_family(c, Family::E); }
std::vector<json> gen_31(const SuiteConfig& c) { return gen_flip_suite(c, false); }
std::vector<json> gen_32(const SuiteConfig& c) { return gen_flip_suite(c, true); }

const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> s{
        {"macmahon", gen_macmahon, run_macmahon},
        {"lemma41", gen_lemma41, run_lemma41},
        {"lemma42", gen_lemma42, run_lemma42},
        {"thmA1", gen_thmA1, run_thmA1},
        {"kuo", gen_kuo, run_kuo},
        {"corA3", gen_corA3, run_corA3},
        {"thm31", gen_31, run_flip},
        {"thm32", gen_32, run_flip},
        {"remark33", gen_remark33, run_remark33},
        {"thm34-A", gen_A, run_thm34},
        {"thm34-B", gen_B, run_thm34},
        {"thm34-C", gen_C, run_thm34},
        {"thm34-D", gen_D, run_thm34},
        {"thm34-E", gen_E, run_thm34},
        {"delta-identities", gen_delta, run_delta},
        {"engine-agreement", gen_agreement, run_agreement},
        {"fern-weight-peel", gen_peel, run_peel},
    };
    return s;
}

const SuiteDef& find_suite(const std::string& name) {
    for (const SuiteDef& d : suites())
        if (d.name == name) return d;
    throw spec_error("unknown suite '" + name + "'");
}

bool same_up_to_translation(const Region& a, const Region& b) {
    if (a.tris.size() != b.tris.size()) return false;
    if (a.tris.empty()) return true;
    const Tri& ta = *a.tris.begin();
    const Tri& tb = *b.tris.begin();
    int dc = tb.col - ta.col, dp = tb.pos - ta.pos;
    if ((dc - dp) & 1) return false;
    Region m = a.translated(dc, dp);
    return m.tris == b.tris && m.frame == b.frame && m.barriers == b.barriers;
}

}  // namespace

std::string EqMode::str() const { return points ? "points:" + std::to_string(n) : "symbolic"; }

EqMode parse_mode(const std::string& s) {
    EqMode m;
    if (s == "symbolic") return m;
    if (s.rfind("points", 0) == 0) {
        m.points = true;
        if (s.size() > 6) {
            if (s[6] != ':') throw spec_error("mode must be symbolic or points:N");
            try {
                m.n = std::stoi(s.substr(7));
            } catch (const std::exception&) {
                throw spec_error("bad point count in " + s);
            }
            if (m.n < 0) throw spec_error("point count must be nonnegative");
        }
        return m;
    }
    throw spec_error("mode must be symbolic or points:N");
}

json SuiteConfig::to_json() const {
    json v = json::array();
    for (Thm34Variant x : variants) v.push_back(variant_name(x));
    return json{{"suite", suite}, {"max", max}, {"samples", samples}, {"seed", seed}, {"mode", mode.str()},
                {"variants", v}};
}

json Report::to_json() const {
    json f = json::array();
    for (const Failure& x : failures) f.push_back({{"instance", x.instance}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    json out{{"suite", suite}, {"config", config}, {"counts", {{"pass", pass}, {"fail", fail}, {"skip", skip}}},
             {"failures", f}, {"wall_ms", wall_ms}};
    if (!notes.empty()) out["notes"] = notes;
    if (!variants.empty()) out["variants"] = variants;
    return out;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> n;
    for (const SuiteDef& d : suites()) n.push_back(d.name);
    return n;
}

bool known_suite(const std::string& s) {
    for (const SuiteDef& d : suites())
        if (d.name == s) return true;
    return false;
}

Thm34Variant resolved_variant(Family f) {
    return f == Family::D ? Thm34Variant::CorrectedY : Thm34Variant::Statement;
}

std::vector<json> suite_instances(const SuiteConfig& cfg) { return find_suite(cfg.suite).gen(cfg); }

InstanceResult run_instance(const std::string& suite, const json& instance, const EqMode& mode) {
    const SuiteDef& d = find_suite(suite);
    try {
        return d.run(instance, mode);
    } catch (const cap_exceeded& e) {
        return skip(std::string("cap exceeded: ") + e.what());
    } catch (const json::exception& e) {
        throw spec_error(std::string("malformed instance: ") + e.what());
    } catch (const spec_error&) {
        throw;
    } catch (const std::exception& e) {
        return fail(std::string("error: ") + e.what(), "");
    }
}

Report check(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    const SuiteDef& d = find_suite(cfg.suite);
    std::vector<json> inst = d.gen(cfg);
    std::vector<InstanceResult> res(inst.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::string err;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < inst.size();) {
            try {
                res[i] = run_instance(cfg.suite, inst[i], cfg.mode);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> g(err_mu);
                res[i] = fail(std::string("error: ") + e.what(), "");
            }
        }
    };
    int nt = cfg.threads > 0 ? cfg.threads : int(std::max(1u, std::thread::hardware_concurrency()));
    nt = std::min<int>(nt, std::max<std::size_t>(1, inst.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Report r;
    r.suite = cfg.suite;
    r.config = cfg.to_json();
    int max_points = 0;
    long nonzero = 0;
    std::map<std::string, std::map<std::string, long>> var;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const InstanceResult& x = res[i];
        switch (x.status) {
            case Status::Pass: ++r.pass; break;
            case Status::Fail:
                ++r.fail;
                r.failures.push_back({inst[i], x.lhs, x.rhs});
                break;
            case Status::Skip: ++r.skip; break;
        }
        if (x.extra.is_object()) {
            if (x.extra.contains("points")) max_points = std::max(max_points, x.extra["points"].get<int>());
            if (x.extra.value("nonzero", false)) ++nonzero;
            if (x.extra.contains("variants"))
                for (auto& [name, v] : x.extra["variants"].items()) {
                    auto& s = var[name];
                    s[v["pass"].get<bool>() ? "pass" : "fail"] += 1;
                    if (v["differs"].get<bool>()) {
                        s["differs"] += 1;
                        s[v["pass"].get<bool>() ? "pass_where_differs" : "fail_where_differs"] += 1;
                    }
                }
        }
    }
    if (cfg.mode.points) r.notes.push_back("largest point count used: " + std::to_string(max_points));
    if (cfg.suite == "engine-agreement") r.notes.push_back("nonvanishing instances: " + std::to_string(nonzero));
    if (!var.empty()) {
        for (auto& [name, s] : var) {
            json o = json::object();
            for (auto& [k, v] : s) o[k] = v;
            for (const char* k : {"pass", "fail", "differs", "pass_where_differs", "fail_where_differs"})
                if (!o.contains(k)) o[k] = 0;
            r.variants[name] = o;
        }
        Family fam = family_from_char(cfg.suite.back());
        r.variants["resolved"] = variant_name(resolved_variant(fam));
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ---------------------------------------------------------------- flips

json flip_to_json(const FlipInstance& f) {
    return json{{"from", hspec_to_json(f.from)}, {"Fl", labels_to_json(f.Fl)}, {"Fr", labels_to_json(f.Fr)}};
}

FlipInstance flip_from_json(const json& j) {
    FlipInstance f;
    f.from = hspec_from_json(j.at("from"));
    f.Fl = labels_from_json(j.at("Fl"));
    f.Fr = labels_from_json(j.at("Fr"));
    return f;
}

std::vector<FlipInstance> gen_flip_instances(bool prime, int cap, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FlipInstance> out;
    std::set<std::pair<HSpec, std::pair<LabelSet, LabelSet>>> seen;
    for (int tries = 0; int(out.size()) < count && tries < 200 * count + 1000; ++tries) {
        HSpec s;
        s.prime = prime;
        do {
            s.m = draw_in(rng, 0, cap);
            s.n = draw_in(rng, 0, cap);
            s.a = draw_in(rng, 0, cap);
            s.c = draw_in(rng, 0, cap);
        } while (s.N() > cap);
        s.b = draw_in(rng, 0, 2 * s.a + 2 * s.c + (prime ? 2 : 1));
        std::vector<Label2> pos, all = s.labels();
        for (Label2 l : all)
            if (l > 0) pos.push_back(l);
        if (int(pos.size()) < s.m + s.n) continue;
        shuffle_det(pos, rng);
        LabelSet Fl, Fr;
        for (int i = 0; i < s.m; ++i) Fl.insert({pos[i], -pos[i]});
        for (int i = s.m; i < s.m + s.n; ++i) Fr.insert({pos[i], -pos[i]});
        s.L1 = Fl;
        s.R1 = Fr;
        // a few extra dents, some on both sides
        for (Label2 l : all) {
            if (Fl.count(l) || Fr.count(l)) continue;
            int d = int(draw(rng, 8));
            if (d == 0 && l != 0) s.L1.insert(l);
            else if (d == 1) s.R1.insert(l);
            else if (d == 2 && l != 0) {
                s.L1.insert(l);
                s.R1.insert(l);
            }
        }
        // fix the balance by adding dents on the heavy side
        bool ok = true;
        for (int guard = 0; guard < 64; ++guard) {
            int bal;
            try {
                bal = balance(hex_intrusion(s));
            } catch (const std::exception&) {
                ok = false;
                break;
            }
            if (bal == 0) break;
            std::vector<Label2> cand;
            for (Label2 l : all) {
                if (bal > 0 && l != 0 && !s.L1.count(l) && !s.R1.count(l)) cand.push_back(l);
                if (bal < 0 && !s.R1.count(l) && !s.L1.count(l)) cand.push_back(l);
            }
            if (cand.empty()) {
                ok = false;
                break;
            }
            (bal > 0 ? s.L1 : s.R1).insert(cand[draw(rng, cand.size())]);
        }
        if (!ok) continue;
        for (Label2 l : all)
            if (!s.L1.count(l) && !s.R1.count(l) && draw(rng, 6) == 0) s.B.insert(l);
        FlipInstance f{s, Fl, Fr};
        try {
            s.validate();
            Region r = hex_intrusion(s);
            if (balance(r) != 0) continue;
            if (seen.count({s, {Fl, Fr}})) continue;
            if (count_tilings(r, verify_cap()) == 0) continue;
            if (count_tilings(hex_intrusion(f.to()), verify_cap()) == 0) continue;
        } catch (const std::exception&) {
            continue;
        }
        seen.insert({s, {Fl, Fr}});
        out.push_back(f);
    }
    return out;
}

// --------------------------------------------------------------- points

PointsOutcome points_equal(const Side& lhs, const Side& rhs, int requested) {
    const int cap = verify_cap();
    auto range = [&](const Side& s, std::vector<int>& bounds) {
        int lo = s.poly.min_q(), hi = s.poly.max_q();
        for (const Region& r : s.regions) {
            int e = exponent_bound(r, cap);
            bounds.push_back(e);
            if (e < 0) e = 0;
            lo -= e;
            hi += e;
        }
        return std::pair<int, int>(lo, hi);
    };
    std::vector<int> bl, br;
    auto [l0, l1] = range(lhs, bl);
    auto [r0, r1] = range(rhs, br);
    PointsOutcome o;
    o.degree_bound = std::max(l1, r1) - std::min(l0, r0);
    o.points = std::max(requested, o.degree_bound + 1);
    std::vector<long> pts = point_list(o.points);
    auto eval = [&](const Side& s, const std::vector<int>& bounds) {
        std::vector<mpq_class> v(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) v[i] = eval_at(s.poly, pts[i]);
        for (std::size_t k = 0; k < s.regions.size(); ++k) {
            if (bounds[k] < 0) {
                for (auto& x : v) x = 0;
                continue;
            }
            std::vector<mpq_class> m = tgf_points(s.regions[k], pts, cap);
            for (std::size_t i = 0; i < pts.size(); ++i) v[i] *= m[i];
        }
        return v;
    };
    o.equal = eval(lhs, bl) == eval(rhs, br);
    return o;
}

// ----------------------------------------------------------------- peel

bool peel_consistent(const FamilySpec& fs, Thm34Variant v, std::string* why) {
    auto say = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    Thm34Instance I = thm34_instance(fs, v);
    HSpec n = I.num, d = I.den;
    n.B = I.barrier;
    d.B = I.barrier;
    PeelResult pn = peel_forced(hex_intrusion(n)), pd = peel_forced(hex_intrusion(d));
    PeelResult pf = peel_forced(family_region(fs)), pc = peel_forced(family_collapsed(fs));
    if (pn.factor.is_zero() || pd.factor.is_zero()) return say("intrusion hexagon with barriers is untileable");
    if (!same_up_to_translation(pn.residual, pf.residual)) return say("numerator residual differs from the family region");
    if (!same_up_to_translation(pd.residual, pc.residual)) return say("denominator residual differs from the collapsed region");
    // corner factors: num / (fern * family) == den / (collapsed fern * collapsed)
    QPoly l = pn.factor * fern_weight(collapsed_fern(fs)) * pc.factor;
    QPoly r = pd.factor * fern_weight(family_fern(fs)) * pf.factor;
    if (l != r) return say("forced-lozenge factors do not match: " + l.str() + " vs " + r.str());
    return true;
}

}  // namespace tilinglab
