#include "tilinglab/qlaurent.hpp"

#include <algorithm>
#include <sstream>

namespace tilinglab {

QPoly::QPoly(long c) {
    if (c != 0) t_[Mono{}] = c;
}

QPoly::QPoly(const mpq_class& c) {
    if (c != 0) {
        t_[Mono{}] = c;
        t_[Mono{}].canonicalize();
    }
}

QPoly QPoly::monomial(const mpq_class& c, int eq, int ex, int ey) {
    if (ex < 0 || ey < 0) throw std::invalid_argument("negative X/Y exponent");
    QPoly p;
    if (c != 0) {
        mpq_class v = c;
        v.canonicalize();
        p.t_[Mono{eq, ex, ey}] = v;
    }
    return p;
}

void QPoly::add_term(const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    mpq_class v = c;
    v.canonicalize();
    auto [it, fresh] = t_.try_emplace(m, v);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool QPoly::has_xy() const {
    for (const auto& [m, c] : t_)
        if (m.x != 0 || m.y != 0) return true;
    return false;
}

int QPoly::min_q() const {
    if (t_.empty()) return 0;
    int lo = t_.begin()->first.q;
    for (const auto& kv : t_) lo = std::min(lo, kv.first.q);
    return lo;
}

int QPoly::max_q() const {
    if (t_.empty()) return 0;
    return t_.rbegin()->first.q;
}

Mono QPoly::lead_mono() const {
    if (t_.empty()) throw std::domain_error("lead of zero polynomial");
    return t_.rbegin()->first;
}

mpq_class QPoly::lead_coeff() const {
    if (t_.empty()) return 0;
    return t_.rbegin()->second;
}

mpq_class QPoly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? mpq_class(0) : it->second;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}

namespace {

// Dense convolution for the common univariate case.
QPoly mul_univariate(const QPoly& a, const QPoly& b) {
    int alo = a.min_q(), ahi = a.max_q();
    int blo = b.min_q(), bhi = b.max_q();
    std::vector<mpq_class> av(ahi - alo + 1), bv(bhi - blo + 1);
    for (const auto& [m, c] : a.terms()) av[m.q - alo] = c;
    for (const auto& [m, c] : b.terms()) bv[m.q - blo] = c;
    std::vector<mpq_class> out(av.size() + bv.size() - 1);
    for (std::size_t i = 0; i < av.size(); ++i) {
        if (av[i] == 0) continue;
        for (std::size_t j = 0; j < bv.size(); ++j) {
            if (bv[j] == 0) continue;
            out[i + j] += av[i] * bv[j];
        }
    }
    QPoly r;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] != 0) r.add_term(Mono{int(i) + alo + blo, 0, 0}, out[i]);
    return r;
}

}  // namespace

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    if (!a.has_xy() && !b.has_xy() && a.size() > 2 && b.size() > 2)
        return mul_univariate(a, b);
    QPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(Mono{ma.q + mb.q, ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly QPoly::scaled(const mpq_class& c) const {
    if (c == 0) return QPoly();
    QPoly r = *this;
    for (auto& kv : r.t_) kv.second *= c;
    return r;
}

QPoly QPoly::shift_q(int e) const {
    QPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(Mono{m.q + e, m.x, m.y}, c);
    return r;
}

QPoly QPoly::invert_q() const {
    QPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(Mono{-m.q, m.x, m.y}, c);
    return r;
}

mpq_class rat_pow(const mpq_class& b, int e) {
    mpq_class base = b;
    if (e < 0) {
        if (b == 0) throw std::domain_error("zero to a negative power");
        base = 1 / b;
        e = -e;
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), unsigned(e));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), unsigned(e));
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

QPoly QPoly::subst_xy(const mpq_class& x0, const mpq_class& y0) const {
    QPoly r;
    for (const auto& [m, c] : t_)
        r.add_term(Mono{m.q, 0, 0}, c * rat_pow(x0, m.x) * rat_pow(y0, m.y));
    return r;
}

QPoly QPoly::pow(unsigned k) const {
    QPoly r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

std::string QPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Mono& m = it->first;
        mpq_class c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::vector<std::string> parts;
        if (m.x) parts.push_back(m.x == 1 ? "X" : "X^" + std::to_string(m.x));
        if (m.y) parts.push_back(m.y == 1 ? "Y" : "Y^" + std::to_string(m.y));
        if (m.q) parts.push_back(m.q == 1 ? "q" : "q^" + std::to_string(m.q));
        if (parts.empty() || c != 1) parts.insert(parts.begin(), c.get_str());
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

// ---- QRat ----

QRat::QRat(const QPoly& n) : num_(n), den_(1) { normalize(); }

QRat::QRat(const QPoly& n, const QPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    mpq_class lc = den_.lead_coeff();
    int e = den_.lead_mono().q;
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    if (e != 0) {
        num_ = num_.shift_q(-e);
        den_ = den_.shift_q(-e);
    }
}

QRat QRat::operator*(const QRat& o) const { return QRat(num_ * o.num_, den_ * o.den_); }

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero ratio");
    return QRat(num_ * o.den_, den_ * o.num_);
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return QRat(den_, num_);
}

bool QRat::operator==(const QRat& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

QRat QRat::reduced() const {
    if (num_.is_zero() || num_.has_xy() || den_.has_xy()) return *this;
    QPoly g = poly_gcd(num_, den_);
    if (g.size() <= 1) return *this;
    return QRat(poly_divexact(num_, g), poly_divexact(den_, g));
}

std::string QRat::str() const {
    if (den_ == QPoly(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---- q-analogues ----

QPoly q_int(int n) {
    if (n == 0) return QPoly();
    int s = n < 0 ? -1 : 1;
    int a = n < 0 ? -n : n;
    QPoly r;
    for (int k = 0; k < a; ++k) r.add_term(Mono{a - 1 - 2 * k, 0, 0}, s);
    return r;
}

QPoly q_fact(int n) {
    if (n < 0) throw std::invalid_argument("q_fact of negative integer");
    QPoly r(1);
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

QPoly q_plus(int n) {
    QPoly r;
    r.add_term(Mono{n, 0, 0}, mpq_class(1, 2));
    r.add_term(Mono{-n, 0, 0}, mpq_class(1, 2));
    return r;
}

QPoly hyper_q(int n) {
    if (n < 0) throw std::invalid_argument("hyper_q of negative integer");
    QPoly r(1), f(1);
    for (int i = 1; i < n; ++i) {
        f *= q_int(i);
        r *= f;
    }
    return r;
}

// ---- Delta products ----

namespace {

void check_parity(const LabelSet& s, const LabelSet& t = {}) {
    int par = -1;
    for (const LabelSet* set : {&s, &t})
        for (int v : *set) {
            int p = v & 1;
            if (par < 0) par = p;
            else if (p != par) throw label_error("invalid label set: mixed parity");
        }
}

void check_positive(const LabelSet& s) {
    for (int v : s)
        if (v <= 0) throw label_error("invalid label set: nonpositive label " + std::to_string(v));
}

void check_disjoint(const LabelSet& s, const LabelSet& t) {
    for (int v : s)
        if (t.count(v)) throw label_error("invalid label sets: overlap at " + std::to_string(v));
}

// <(a+b)/2>^+ <|b-a|/2>, doubled labels a, b
QPoly pair11(int a, int b) {
    int hi = std::max(a, b), lo = std::min(a, b);
    return q_plus((hi + lo) / 2) * q_int((hi - lo) / 2);
}

// <a+b>/2 <|b-a|>/2, doubled labels a, b
QPoly pair21(int a, int b) {
    int hi = std::max(a, b), lo = std::min(a, b);
    return (q_int(hi + lo) * q_int(hi - lo)).scaled(mpq_class(1, 4));
}

}  // namespace

QPoly delta_11(const LabelSet& s) {
    check_parity(s);
    QPoly r(1);
    for (auto i = s.begin(); i != s.end(); ++i)
        for (auto j = std::next(i); j != s.end(); ++j) r *= pair11(*i, *j);
    return r;
}

QPoly delta_21(const LabelSet& t) {
    check_parity(t);
    check_positive(t);
    QPoly r(1);
    for (auto i = t.begin(); i != t.end(); ++i)
        for (auto j = std::next(i); j != t.end(); ++j) r *= pair21(*i, *j);
    return r;
}

QPoly delta_12(const LabelSet& s, const LabelSet& t) {
    check_parity(s, t);
    check_disjoint(s, t);
    QPoly r(1);
    for (int a : s)
        for (int b : t) r *= pair11(a, b);
    return r;
}

QPoly delta_22(const LabelSet& s, const LabelSet& t) {
    check_parity(s, t);
    check_positive(s);
    check_positive(t);
    check_disjoint(s, t);
    QPoly r(1);
    for (int a : s)
        for (int b : t) r *= pair21(a, b);
    return r;
}

QPoly delta_11_xyk(const std::set<int>& w, int x, int y, int k) {
    for (int v : w)
        if (v < 1 || v > x + y)
            throw label_error("label " + std::to_string(v) + " outside [x+y]");
    QPoly r(1);
    for (auto i = w.begin(); i != w.end(); ++i)
        for (auto j = std::next(i); j != w.end(); ++j) {
            int n = *i + *j + k - (x + y + 1);
            QPoly f;
            f.add_term(Mono{n, 1, 0}, mpq_class(1, 2));
            f.add_term(Mono{-n, 0, 1}, mpq_class(1, 2));
            r *= f * q_int(*j - *i);
        }
    return r;
}

// ---- square roots ----

namespace {

bool rat_sqrt(const mpq_class& c, mpq_class& out) {
    if (c < 0) return false;
    if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t()))
        return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
    out = mpq_class(n, d);
    out.canonicalize();
    return true;
}

}  // namespace

QPoly sqrt_poly(const QPoly& p) {
    if (p.is_zero()) return QPoly();
    Mono lm = p.lead_mono();
    if (lm.q % 2 || lm.x % 2 || lm.y % 2) throw not_square_error("lead monomial is not a square");
    mpq_class lc;
    if (!rat_sqrt(p.lead_coeff(), lc)) throw not_square_error("lead coefficient is not a square");
    Mono rm{lm.q / 2, lm.x / 2, lm.y / 2};
    QPoly root = QPoly::monomial(lc, rm.q, rm.x, rm.y);
    QPoly rem = p - root * root;
    int floor_q = p.min_q();
    while (!rem.is_zero()) {
        Mono m = rem.lead_mono();
        Mono t{m.q - rm.q, m.x - rm.x, m.y - rm.y};
        if (t.x < 0 || t.y < 0 || 2 * t.q < floor_q - 1)
            throw not_square_error("polynomial is not a perfect square");
        QPoly term = QPoly::monomial(rem.lead_coeff() / (2 * lc), t.q, t.x, t.y);
        rem -= (root.scaled(2) + term) * term;
        root += term;
    }
    return root;
}

QRat sqrt_perfect(const QRat& r) {
    if (r.is_zero()) return QRat();
    auto attempt = [](const QRat& v, QRat& out) {
        try {
            QPoly n = sqrt_poly(v.num());
            QPoly d = sqrt_poly(v.den());
            if (n.lead_coeff() < 0) n = -n;
            if (d.lead_coeff() < 0) d = -d;
            out = QRat(n, d);
            return true;
        } catch (const not_square_error&) {
            return false;
        }
    };
    QRat out;
    if (attempt(r, out)) return out;
    if (attempt(r.reduced(), out)) return out;
    throw not_square_error("ratio is not a perfect square: " + r.str());
}

QRat sqrt_perfect(const FactoredRatio& r) {
    std::vector<QPoly> num = r.num, den;
    for (const QPoly& d : r.den) {
        auto it = std::find(num.begin(), num.end(), d);
        if (it != num.end()) num.erase(it);
        else den.push_back(d);
    }
    auto pair_off = [](std::vector<QPoly> fs, QPoly& root, QPoly& rest) {
        root = QPoly(1);
        rest = QPoly(1);
        while (!fs.empty()) {
            QPoly f = fs.back();
            fs.pop_back();
            auto it = std::find(fs.begin(), fs.end(), f);
            if (it != fs.end()) {
                fs.erase(it);
                root *= f;
            } else {
                rest *= f;
            }
        }
    };
    QPoly nroot, nrest, droot, drest;
    pair_off(num, nroot, nrest);
    pair_off(den, droot, drest);
    QRat residue = sqrt_perfect(QRat(nrest, drest));
    QRat out = QRat(nroot, droot) * residue;
    if (out.num().lead_coeff() < 0) out = QRat(-out.num(), out.den());
    return out;
}

// ---- evaluation ----

mpq_class eval_at(const QPoly& p, const mpq_class& q0, const mpq_class& x0, const mpq_class& y0) {
    if (q0 == 0) throw std::domain_error("eval_at: q0 must be nonzero");
    mpq_class s = 0;
    for (const auto& [m, c] : p.terms()) s += c * rat_pow(q0, m.q) * rat_pow(x0, m.x) * rat_pow(y0, m.y);
    return s;
}

mpq_class eval_at(const QRat& r, const mpq_class& q0, const mpq_class& x0, const mpq_class& y0) {
    mpq_class d = eval_at(r.den(), q0, x0, y0);
    if (d == 0) throw std::domain_error("eval_at: denominator vanishes");
    return eval_at(r.num(), q0, x0, y0) / d;
}

// ---- univariate gcd / division ----

namespace {

using Dense = std::vector<mpq_class>;  // index = exponent, from 0

Dense to_dense(const QPoly& p) {
    if (p.has_xy()) throw std::invalid_argument("univariate operation on X/Y polynomial");
    int lo = p.min_q();
    Dense d(p.is_zero() ? 0 : p.max_q() - lo + 1);
    for (const auto& [m, c] : p.terms()) d[m.q - lo] = c;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense dense_rem(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    Dense x = to_dense(a), y = to_dense(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        Dense r = dense_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return QPoly();
    // strip low zero coefficients: monomials are units
    std::size_t lo = 0;
    while (lo < x.size() && x[lo] == 0) ++lo;
    QPoly g;
    mpq_class lc = x.back();
    for (std::size_t i = lo; i < x.size(); ++i)
        if (x[i] != 0) g.add_term(Mono{int(i - lo), 0, 0}, x[i] / lc);
    return g;
}

QPoly poly_divexact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    QPoly quot, rem = a;
    Mono bl = b.lead_mono();
    mpq_class bc = b.lead_coeff();
    int floor_q = a.min_q() - b.min_q();
    while (!rem.is_zero()) {
        Mono m = rem.lead_mono();
        Mono t{m.q - bl.q, m.x - bl.x, m.y - bl.y};
        if (t.x < 0 || t.y < 0 || t.q < floor_q) throw std::domain_error("inexact division");
        QPoly term = QPoly::monomial(rem.lead_coeff() / bc, t.q, t.x, t.y);
        rem -= term * b;
        quot += term;
    }
    return quot;
}

}  // namespace tilinglab
