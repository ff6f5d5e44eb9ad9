// Laurent polynomials in q (with optional nonnegative powers of X and Y)
// over exact rationals, their ratios, and the q-combinatorial products
// built from them.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilinglab {

// Twice a segment label: label 7/2 is stored as 7, label -3 as -6.
using Label2 = int;
using LabelSet = std::set<Label2>;

struct Mono {
    int q = 0;
    int x = 0;
    int y = 0;
    auto operator<=>(const Mono&) const = default;
};

class QPoly {
public:
    using Terms = std::map<Mono, mpq_class>;

    QPoly() = default;
    QPoly(long c);
    QPoly(const mpq_class& c);

    static QPoly monomial(const mpq_class& c, int eq, int ex = 0, int ey = 0);
    static QPoly q(int e = 1) { return monomial(1, e); }
    static QPoly X() { return monomial(1, 0, 1, 0); }
    static QPoly Y() { return monomial(1, 0, 0, 1); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool has_xy() const;
    std::size_t size() const { return t_.size(); }

    // Range of q-exponents; both 0 for the zero polynomial.
    int min_q() const;
    int max_q() const;
    // Lex-largest monomial (q first) and its coefficient.
    Mono lead_mono() const;
    mpq_class lead_coeff() const;
    mpq_class coeff(const Mono& m) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly operator-() const;
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    bool operator==(const QPoly& o) const { return t_ == o.t_; }

    QPoly scaled(const mpq_class& c) const;
    QPoly shift_q(int e) const;
    // q -> 1/q
    QPoly invert_q() const;
    // X -> X0, Y -> Y0, q stays symbolic
    QPoly subst_xy(const mpq_class& x0, const mpq_class& y0) const;
    QPoly pow(unsigned k) const;

    std::string str() const;

    void add_term(const Mono& m, const mpq_class& c);

private:
    Terms t_;
};

// Exact quotient of two QPoly values. Equality is decided by
// cross-multiplication; the stored form is normalized so the denominator's
// lead monomial has q-exponent 0 and coefficient 1.
class QRat {
public:
    QRat() : num_(0), den_(1) {}
    QRat(const QPoly& n);
    QRat(const QPoly& n, const QPoly& d);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat inverse() const;
    bool operator==(const QRat& o) const;

    // Cancel the univariate gcd when no X or Y appears.
    QRat reduced() const;
    std::string str() const;

private:
    QPoly num_, den_;
    void normalize();
};

struct label_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_square_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QPoly q_int(int n);
QPoly q_fact(int n);
QPoly q_plus(int n);
QPoly hyper_q(int n);

// The products below take doubled labels.
QPoly delta_11(const LabelSet& s);
QPoly delta_21(const LabelSet& t);
QPoly delta_12(const LabelSet& s, const LabelSet& t);
QPoly delta_22(const LabelSet& s, const LabelSet& t);

// Pairwise product over w1<w2 in W of ((X q^n + Y q^-n)/2) <w2-w1>,
// n = w1+w2+k-(x+y+1). W holds plain positive integers.
QPoly delta_11_xyk(const std::set<int>& w, int x, int y, int k);

// Square root of a perfect-square ratio, leading coefficients positive.
QRat sqrt_perfect(const QRat& r);

// Factored radicand: cancels identical factors and pairs equal ones before
// falling back to a polynomial square root of whatever remains.
struct FactoredRatio {
    std::vector<QPoly> num;
    std::vector<QPoly> den;
};
QRat sqrt_perfect(const FactoredRatio& r);

// Laurent square root; throws not_square_error.
QPoly sqrt_poly(const QPoly& p);

mpq_class eval_at(const QPoly& p, const mpq_class& q0, const mpq_class& x0 = 1,
                  const mpq_class& y0 = 1);
mpq_class eval_at(const QRat& r, const mpq_class& q0, const mpq_class& x0 = 1,
                  const mpq_class& y0 = 1);

// Univariate helpers (no X, Y).
QPoly poly_gcd(const QPoly& a, const QPoly& b);
// Exact division; throws if b does not divide a.
QPoly poly_divexact(const QPoly& a, const QPoly& b);

mpq_class rat_pow(const mpq_class& b, int e);

}  // namespace tilinglab
