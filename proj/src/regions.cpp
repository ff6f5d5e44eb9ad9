#include "tilinglab/regions.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace tilinglab {

namespace {

std::pair<int, int> delta(Step s) {
    switch (s) {
        case Step::N: return {0, 2};
        case Step::NE: return {1, 1};
        case Step::SE: return {1, -1};
        case Step::S: return {0, -2};
        case Step::SW: return {-1, -1};
        case Step::NW: return {-1, 1};
    }
    return {0, 0};
}

using Path = std::vector<std::pair<Step, int>>;

void need(bool ok, const std::string& what) {
    if (!ok) throw spec_error(what);
}

std::string join(const LabelSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        if (!first) os << ',';
        first = false;
        os << v;
    }
    os << '}';
    return os.str();
}

LabelSet unite(std::initializer_list<const LabelSet*> parts) {
    LabelSet out;
    for (const LabelSet* p : parts) out.insert(p->begin(), p->end());
    return out;
}

// {lo+1, ..., hi}, i.e. [hi] \ [lo]
std::vector<int> interval(int lo, int hi) {
    std::vector<int> v;
    for (int j = std::max(lo, 0) + 1; j <= hi; ++j) v.push_back(j);
    return v;
}

}  // namespace

std::set<Tri> polygon_tris(int c0, int p0, const Path& sides) {
    need(((p0 - c0) & 1) == 0, "polygon start is not a lattice vertex");
    std::vector<std::pair<long, long>> vs;
    int c = c0, p = p0;
    int cmin = c, cmax = c, pmin = p, pmax = p;
    for (auto [s, len] : sides) {
        need(len >= 0, "negative side length");
        auto [dc, dp] = delta(s);
        vs.push_back({3L * c, 3L * p});
        c += dc * len;
        p += dp * len;
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
        pmin = std::min(pmin, p);
        pmax = std::max(pmax, p);
    }
    need(c == c0 && p == p0, "polygon path does not close");
    std::set<Tri> out;
    auto inside = [&](long px, long py) {
        bool in = false;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            auto [ax, ay] = vs[i];
            auto [bx, by] = vs[(i + 1) % vs.size()];
            if ((ay > py) == (by > py)) continue;
            // px < ax + (py-ay)(bx-ax)/(by-ay)
            long num = (py - ay) * (bx - ax), den = by - ay;
            long lhs = (px - ax) * den;
            if (den > 0 ? lhs < num : lhs > num) in = !in;
        }
        return in;
    };
    for (int cc = cmin; cc < cmax; ++cc)
        for (int pp = pmin; pp <= pmax; ++pp) {
            Tri t = Tri::at(cc, pp);
            long px = 3L * cc + (t.left() ? 2 : 1), py = 3L * pp;
            if (inside(px, py)) out.insert(t);
        }
    return out;
}

Region hexagon(int a, int b, int c, const WeightFrame& frame) {
    need(a >= 0 && b >= 0 && c >= 0, "hexagon sides must be nonnegative");
    Region r;
    r.frame = frame;
    r.tris = polygon_tris(a & 1, -a,
                          {{Step::N, a}, {Step::NE, b}, {Step::SE, c}, {Step::S, a}, {Step::SW, b}, {Step::NW, c}});
    return r;
}

Region trapezoid_S(int x, int y, const LabelSet& Z, const WeightFrame& frame) {
    need(x >= 0 && y >= 0, "trapezoid sides must be nonnegative");
    int c0 = x & 1;
    Region r;
    r.frame = frame;
    r.tris = polygon_tris(c0, -x, {{Step::N, x}, {Step::NE, y}, {Step::S, x + y}, {Step::NW, y}});
    const int col = c0 + y - 1;
    for (Label2 z : Z) {
        need(((z + x + y + 1) & 1) == 0 && std::abs(z) <= x + y - 1,
             "trapezoid dent label " + std::to_string(z) + " out of range");
        Tri t = Tri::at(col, z);
        need(r.tris.count(t) > 0, "dent label " + std::to_string(z) + " is not on a triangle of the region");
        r.tris.erase(t);
        r.holes.insert(t);
    }
    return r;
}

Region trapezoid_S_bar(int x, int y, const std::set<int>& W, int k, WeightFrame frame) {
    LabelSet Z;
    for (int w : W) {
        need(w >= 1 && w <= x + y, "W must be a subset of [x+y]");
        Z.insert(2 * w - (x + y + 1));
    }
    frame.axis_offset2 = -k;
    return trapezoid_S(x, y, Z, frame);
}

Region quarter_R_even(int x, int y, const LabelSet& Z) {
    need(x >= 0 && y >= 0, "quartered hexagon parameters must be nonnegative");
    Path path{{Step::N, x}, {Step::NE, 2 * y}, {Step::S, x + y}};
    for (int i = 0; i < 2 * y; ++i) path.push_back({i % 2 == 0 ? Step::SW : Step::NW, 1});
    Region r;
    r.frame.axis_offset2 = -1;
    r.tris = polygon_tris(0, 0, path);
    for (Label2 z : Z) {
        need(z % 2 == 0 && z >= 2 && z <= 2 * (x + y), "R_{x,2y} dent label " + std::to_string(z) + " out of range");
        Tri t = Tri::at(2 * y - 1, z - 1);
        need(r.tris.count(t) > 0, "dent label " + std::to_string(z) + " is not on a triangle of the region");
        r.tris.erase(t);
        r.holes.insert(t);
    }
    return r;
}

Region quarter_R_odd(int x, int y, const LabelSet& Z) {
    need(x >= 0 && y >= 0, "quartered hexagon parameters must be nonnegative");
    Path path{{Step::N, x}, {Step::NE, 2 * y + 1}, {Step::S, x + y + 1}};
    for (int i = 0; i < 2 * y + 1; ++i) path.push_back({i % 2 == 0 ? Step::NW : Step::SW, 1});
    Region r;
    r.frame.axis_offset2 = -1;
    r.tris = polygon_tris(0, 0, path);
    for (Label2 z : Z) {
        need((z & 1) == 1 && z >= 1 && z <= 2 * (x + y) + 1,
             "R_{x,2y+1} dent label " + std::to_string(z) + " out of range");
        Tri t = Tri::at(2 * y, z - 1);
        need(r.tris.count(t) > 0, "dent label " + std::to_string(z) + " is not on a triangle of the region");
        r.tris.erase(t);
        r.holes.insert(t);
    }
    return r;
}

// ---- ferns ----

void FernSpec::validate() const {
    need(arms.size() % 2 == 1, "fern needs an odd number of arms");
    for (std::size_t i = 0; i + 1 < arms.size(); ++i) need(arms[i] > 0, "fern arms a1..a2k must be positive");
    need(arms.back() >= 0, "last fern arm must be nonnegative");
}

int FernSpec::ao() const {
    int s = 0;
    for (std::size_t i = 0; i < arms.size(); i += 2) s += arms[i];
    return s;
}

int FernSpec::ae() const {
    int s = 0;
    for (std::size_t i = 1; i < arms.size(); i += 2) s += arms[i];
    return s;
}

namespace {

// Visits (arm index, bottom pos, size) for every triangle of the fern.
template <class F>
void each_fern_triangle(const FernSpec& f, F&& fn) {
    int s1 = f.arms[0];
    fn(0, -s1, s1);
    int up = s1;
    for (std::size_t i = 1; i < f.arms.size(); ++i) {
        int s = f.arms[i];
        fn(int(i), up, s);
        fn(int(i), -up - 2 * s, s);
        up += 2 * s;
    }
}

}  // namespace

LabelSet FernSpec::P_o() const {
    validate();
    LabelSet out;
    each_fern_triangle(*this, [&](int i, int p0, int s) {
        if (i % 2 == 0)
            for (int j = 0; j < s; ++j) out.insert(p0 + 2 * j + 1);
    });
    return out;
}

LabelSet FernSpec::P_e() const {
    validate();
    LabelSet out;
    each_fern_triangle(*this, [&](int i, int p0, int s) {
        if (i % 2 == 1)
            for (int j = 0; j < s; ++j) out.insert(p0 + 2 * j + 1);
    });
    return out;
}

std::set<Tri> fern_tris(const FernSpec& f, int axis_col) {
    f.validate();
    need(((axis_col - f.arms[0]) & 1) == 0, "fern axis parity does not match the core size");
    std::set<Tri> out;
    each_fern_triangle(f, [&](int i, int p0, int s) {
        if (s == 0) return;
        bool left = (i % 2 == 0) != f.flipped;
        Path path = left ? Path{{Step::N, s}, {Step::SW, s}, {Step::SE, s}}
                         : Path{{Step::N, s}, {Step::SE, s}, {Step::SW, s}};
        auto t = polygon_tris(axis_col, p0, path);
        out.insert(t.begin(), t.end());
    });
    return out;
}

QPoly fern_weight(const FernSpec& f) {
    auto tris = fern_tris(f, f.arms[0] & 1);
    QPoly w(1);
    for (const Tri& t : tris)
        if (t.left() && tris.count(horizontal_partner(t))) w *= q_plus(t.pos);
    return w;
}

// ---- hexagons with intrusions ----

std::vector<Label2> HSpec::labels() const {
    std::vector<Label2> v;
    for (int l = -max_label(); l <= max_label(); l += 2) v.push_back(l);
    return v;
}

std::string HSpec::name() const {
    std::ostringstream os;
    os << (prime ? "H'" : "H") << '_' << m << ',' << n << ',' << a << ',' << b << ',' << c << '(' << join(L1) << ','
       << join(R1) << ',' << join(B) << ')';
    return os.str();
}

void HSpec::validate() const {
    need(m >= 0 && n >= 0 && a >= 0 && b >= 0 && c >= 0, "m,n,a,b,c must be nonnegative");
    if (prime) need(2 * a + 2 * c + 2 >= b, "constraint 2a+2c+2 >= b violated");
    else need(2 * a + 2 * c + 1 >= b, "constraint 2a+2c+1 >= b violated");
    const int par = prime ? 1 : 0;
    for (const LabelSet* s : {&L1, &R1, &B})
        for (Label2 l : *s) {
            need((l & 1) == par, std::string("label ") + std::to_string(l) + (prime ? " must be odd" : " must be even"));
            need(std::abs(l) <= max_label(), "label " + std::to_string(l) + " outside the diagonal");
        }
    if (!prime) need(!L1.count(0), "L1 cannot contain 0");
    for (Label2 l : B) need(!L1.count(l) && !R1.count(l), "B must be disjoint from L1 and R1");
    int lr = 0, rl = 0;
    for (Label2 l : L1) lr += !R1.count(l);
    for (Label2 l : R1) rl += !L1.count(l);
    need(lr >= 2 * m, "|L1 \\ R1| >= 2m violated");
    need(rl >= 2 * n, "|R1 \\ L1| >= 2n violated");
}

Region hex_intrusion(const HSpec& s) {
    s.validate();
    const int D = s.diag_col();
    const int right = 2 * s.m + 2 * s.a + 2 * s.c - s.b + (s.prime ? 2 : 1);
    Region r;
    r.tris = polygon_tris(0, -(2 * s.n + 2 * s.c),
                          {{Step::N, 2 * s.n + 2 * s.c},
                           {Step::NE, D},
                           {Step::SE, 2 * s.n + s.b},
                           {Step::S, right},
                           {Step::SW, 2 * s.n + s.b},
                           {Step::NW, D}});
    auto drop = [&](const Tri& t) {
        r.tris.erase(t);
        r.holes.insert(t);
    };
    for (int i = 0; i < D; ++i) drop(Tri::at(i, 0));
    auto dent = [&](const Tri& t, Label2 l) {
        need(r.tris.count(t) > 0, "dent label " + std::to_string(l) + " is not on a triangle of the region");
        drop(t);
    };
    for (Label2 l : s.L1) dent(Tri::at(D - 1, l), l);
    for (Label2 l : s.R1) dent(Tri::at(D, l), l);
    for (Label2 l : s.B) {
        Tri lt = Tri::at(D - 1, l);
        if (r.contains(lt) && r.contains(horizontal_partner(lt))) r.barriers.insert(Edge{lt, Dir::Horizontal});
    }
    return r;
}

HSpec flip(const HSpec& s, const LabelSet& Fl, const LabelSet& Fr) {
    s.validate();
    for (Label2 l : Fl) {
        need(s.L1.count(l) && !s.R1.count(l), "Fl must lie in L1 \\ R1");
        need(Fl.count(-l), "Fl must be symmetric");
    }
    for (Label2 l : Fr) {
        need(s.R1.count(l) && !s.L1.count(l), "Fr must lie in R1 \\ L1");
        need(Fr.count(-l), "Fr must be symmetric");
    }
    need(int(Fl.size()) == 2 * s.m, "|Fl| must equal 2m");
    need(int(Fr.size()) == 2 * s.n, "|Fr| must equal 2n");
    HSpec t = s;
    std::swap(t.m, t.n);
    t.L1.clear();
    t.R1.clear();
    for (Label2 l : s.L1)
        if (!Fl.count(l)) t.L1.insert(l);
    t.L1.insert(Fr.begin(), Fr.end());
    for (Label2 l : s.R1)
        if (!Fr.count(l)) t.R1.insert(l);
    t.R1.insert(Fl.begin(), Fl.end());
    t.validate();
    return t;
}

// ---- families ----

char family_char(Family f) { return "ABCDE"[int(f)]; }

Family family_from_char(char c) {
    need(c >= 'A' && c <= 'E', std::string("unknown family ") + c);
    return Family(c - 'A');
}

int FamilySpec::ao() const { return FernSpec{arms}.ao(); }
int FamilySpec::ae() const { return FernSpec{arms}.ae(); }

void FamilySpec::validate() const {
    need(x >= 0 && y >= 0 && z >= 0 && w >= 0, "x,y,z,w must be nonnegative");
    need(z >= w, "family regions assume z >= w");
    FernSpec{arms}.validate();
    need(arms[0] >= 1, "a1 must be positive");
}

std::string FamilySpec::name() const {
    std::ostringstream os;
    os << family_char(family) << '(' << x << ',' << y << ',' << z << ',' << w << ';';
    for (std::size_t i = 0; i < arms.size(); ++i) os << (i ? "," : "") << arms[i];
    os << ')';
    return os.str();
}

FernSpec family_fern(const FamilySpec& fs) {
    FernSpec f{fs.arms};
    bool even_core = fs.family == Family::A || fs.family == Family::D;
    f.arms[0] = even_core ? 2 * fs.arms[0] : 2 * fs.arms[0] - 1;
    f.flipped = fs.family == Family::D || fs.family == Family::E;
    return f;
}

FamilySpec collapsed_spec(const FamilySpec& fs) {
    FamilySpec c = fs;
    c.arms = {fs.a()};
    if (fs.family == Family::D) c.family = Family::A;
    if (fs.family == Family::E) c.family = Family::C;
    return c;
}

FernSpec collapsed_fern(const FamilySpec& fs) { return family_fern(collapsed_spec(fs)); }

Region family_region(const FamilySpec& fs) {
    fs.validate();
    const int x = fs.x, y = fs.y, z = fs.z, w = fs.w;
    const int ao = fs.ao(), ae = fs.ae(), a1 = fs.arms[0];
    std::vector<int> s;
    int len = 0, axis = 0;
    switch (fs.family) {
        case Family::A:
            s = {2 * ae + 2 * x, 2 * ao + y + w, 2 * ae + y + z, 2 * ao + 2 * x, 2 * ae + y + w, 2 * ao + y + z};
            len = 2 * (ao - a1) + 2 * y;
            axis = 2 * ao + 2 * y;
            break;
        case Family::B:
            s = {2 * ae + 2 * x, 2 * ao + y + w - 1, 2 * ae + y + z, 2 * ao + 2 * x - 1, 2 * ae + y + w, 2 * ao + y + z - 1};
            len = 2 * (ao - a1) + 2 * y;
            axis = 2 * ao + 2 * y - 1;
            break;
        case Family::C:
            s = {2 * ae + 2 * x,     2 * ao + y + w - 1, 2 * ae + y + z + 1,
                 2 * ao + 2 * x - 2, 2 * ae + y + w + 1, 2 * ao + y + z - 1};
            len = 2 * (ao - a1) + 2 * y;
            axis = 2 * ao + 2 * y - 1;
            break;
        case Family::D:
            s = {2 * ao + 2 * x, 2 * ae + y + w, 2 * ao + y + z, 2 * ae + 2 * x, 2 * ao + y + w, 2 * ae + y + z};
            len = 2 * ae + 2 * y;
            axis = len;
            break;
        case Family::E:
            s = {2 * ao + 2 * x - 2, 2 * ae + y + w + 1, 2 * ao + y + z - 1,
                 2 * ae + 2 * x,     2 * ao + y + w - 1, 2 * ae + y + z + 1};
            len = 2 * ae + 2 * y + 1;
            axis = len;
            break;
    }
    for (int v : s) need(v >= 0, "family side length is negative for " + fs.name());
    Region r;
    r.tris = polygon_tris(0, -s[0],
                          {{Step::N, s[0]}, {Step::NE, s[1]}, {Step::SE, s[2]}, {Step::S, s[3]}, {Step::SW, s[4]},
                           {Step::NW, s[5]}});
    auto drop = [&](const Tri& t) {
        r.tris.erase(t);
        r.holes.insert(t);
    };
    for (int i = 0; i < len; ++i) drop(Tri::at(i, 0));
    for (const Tri& t : fern_tris(family_fern(fs), axis)) drop(t);
    if (fs.family == Family::C) drop(Tri::at(axis, 0));
    return r;
}

Region family_collapsed(const FamilySpec& fs) { return family_region(collapsed_spec(fs)); }

std::string ycase_name(YCase c) {
    switch (c) {
        case YCase::YltW: return "y<w";
        case YCase::WleYleZ: return "w<=y<=z";
        case YCase::ZltY: return "z<y";
    }
    return "?";
}

YCase ycase_of(const FamilySpec& fs) {
    if (fs.y < fs.w) return YCase::YltW;
    if (fs.y <= fs.z) return YCase::WleYleZ;
    return YCase::ZltY;
}

std::string variant_name(Thm34Variant v) {
    switch (v) {
        case Thm34Variant::Statement: return "statement";
        case Thm34Variant::ProofIndexing: return "proof-indexing";
        case Thm34Variant::CorrectedY: return "corrected-Y";
    }
    return "?";
}

Thm34Instance thm34_instance(const FamilySpec& fs, Thm34Variant v) {
    fs.validate();
    const Family fam = fs.family;
    const int x = fs.x, y = fs.y, z = fs.z, w = fs.w, a = fs.a(), ao = fs.ao(), ae = fs.ae();
    const bool hprime = fam == Family::A || fam == Family::D;
    const int e = hprime ? 0 : 1;  // H families use the "-1" intervals
    Thm34Instance I;
    I.ycase = ycase_of(fs);
    I.variant = v;

    FernSpec f = family_fern(fs);
    I.Qo = f.P_o();
    I.Qe = f.P_e();

    const bool low = y <= z;
    auto lab = [&](int j) {
        if (hprime) return 2 * j - (low ? 2 * a + 2 * x + 2 * z + 1 : 2 * a + 2 * x + 2 * y + 1);
        return 2 * (j - (low ? a + x + z : a + x + y));
    };
    auto to_labels = [&](const std::vector<int>& js) {
        LabelSet out;
        for (int j : js) out.insert(lab(j));
        return out;
    };
    I.X = to_labels(low ? interval(0, z - y) : interval(0, y - z));
    const int base = 2 * a + 2 * x - e;
    switch (I.ycase) {
        case YCase::YltW:
            I.Y = to_labels(interval(base + y + z, base + z + w));
            I.barrier = to_labels(interval(base + z + w, base + 2 * z));
            break;
        case YCase::WleYleZ: {
            int lo = base + z + w;
            if (fam == Family::D && v != Thm34Variant::CorrectedY) lo = 2 * a + 2 * x + z + 2;
            I.Y = to_labels(interval(lo, base + y + z));
            I.barrier = to_labels(interval(base + y + z, base + 2 * z));
            break;
        }
        case YCase::ZltY:
            I.Y = to_labels(interval(base + y + w, base + 2 * y));
            break;
    }

    const int cpar = low ? x - y + z : x;
    HSpec num;
    num.prime = hprime;
    num.m = 0;
    num.c = cpar;
    LabelSet zero{0};
    // o/e roles: the side whose triangles stay left-pointing vs. get flipped
    bool swap_oe = fam == Family::D || fam == Family::E ||
                   (fam == Family::A && v == Thm34Variant::ProofIndexing);
    LabelSet stay = swap_oe ? I.Qe : I.Qo;
    LabelSet move = swap_oe ? I.Qo : I.Qe;
    switch (fam) {
        case Family::A:
            num.n = swap_oe ? ao : ae;
            num.a = swap_oe ? ae + y - 1 : ao + y - 1;
            num.b = z + w;
            break;
        case Family::B:
            num.n = ae;
            num.a = ao + y - 1;
            num.b = z + w;
            break;
        case Family::C:
            num.n = ae;
            num.a = ao + y - 1;
            num.b = z + w + 1;
            break;
        case Family::D:
            num.n = ao;
            num.a = ae + y - 1;
            num.b = z + w;
            break;
        case Family::E:
            num.n = ao - 1;
            num.a = ae + y;
            num.b = z + w + 1;
            break;
    }
    LabelSet L1, R1, L2, R2;
    switch (I.ycase) {
        case YCase::YltW:
            L1 = stay;
            R1 = unite({&move, &I.X, &I.Y});
            L2 = unite({&I.Qo, &I.Qe});
            R2 = unite({&I.X, &I.Y});
            break;
        case YCase::WleYleZ:
            L1 = unite({&stay, &I.Y});
            R1 = unite({&move, &I.X});
            L2 = unite({&I.Qo, &I.Qe, &I.Y});
            R2 = I.X;
            break;
        case YCase::ZltY:
            L1 = unite({&stay, &I.X, &I.Y});
            R1 = move;
            L2 = unite({&I.Qo, &I.Qe, &I.X, &I.Y});
            R2 = {};
            break;
    }
    if (fam == Family::C) {
        R1.insert(0);
        R2.insert(0);
    }
    if (fam == Family::E) R2.insert(0);
    if (!hprime) {
        // the left-pointing triangle at label 0 belongs to the intrusion
        L1.erase(0);
        L2.erase(0);
    }
    num.L1 = L1;
    num.R1 = R1;
    I.Fr = move;
    if (fam == Family::E) I.Fr.erase(0);
    num.B = {};
    num.validate();
    I.num = num;
    I.den = flip(num, {}, I.Fr);
    need(I.den.L1 == L2 && I.den.R1 == R2, "flip of the numerator does not give the printed denominator sets");
    return I;
}

}  // namespace tilinglab
