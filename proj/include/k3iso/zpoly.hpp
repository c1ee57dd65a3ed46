#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace k3iso {

using ZInt = mpz_class;
using QNum = mpq_class;

// Dense univariate polynomial over Z, coefficients in ascending degree.
// The zero polynomial has an empty coefficient vector and degree -1.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<ZInt> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    static ZPoly constant(const ZInt& c);
    static ZPoly monomial(const ZInt& c, int k);
    static ZPoly x() { return monomial(1, 1); }
    static ZPoly from_longs(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<ZInt>& coeffs() const { return c_; }
    // Coefficient of X^i; zero outside the stored range.
    ZInt coeff(int i) const;
    const ZInt& lead() const;
    ZInt constant_term() const { return coeff(0); }
    bool is_monic() const { return !is_zero() && lead() == 1; }

    ZInt eval(const ZInt& a) const;
    QNum eval(const QNum& a) const;
    int sign_at(const QNum& a) const;

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    ZPoly& operator*=(const ZInt& k);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const ZInt& k) { return a *= k; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    // Canonical order: degree first, then coefficients lexicographically
    // from the constant term upward.
    friend bool canonical_less(const ZPoly& a, const ZPoly& b);

    // "x^4 - x^2 + 1"
    std::string str() const;
    std::vector<std::string> coeff_strings() const;

private:
    void normalize();
    std::vector<ZInt> c_;
};

bool canonical_less(const ZPoly& a, const ZPoly& b);

ZPoly pow(const ZPoly& f, unsigned n);

// Throws NotDivisible if g does not divide f over Z, ZeroDivisor if g = 0.
ZPoly exact_divide(const ZPoly& f, const ZPoly& g);
// Returns true and sets q when g | f over Z.
bool try_divide(const ZPoly& f, const ZPoly& g, ZPoly& q);

// lc(g)^(deg f - deg g + 1) f = q g + r with deg r < deg g.
void pseudo_divrem(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r);
// Division by a monic divisor; quotient and remainder are integral.
void monic_divrem(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r);

ZPoly derivative(const ZPoly& f);
ZInt content(const ZPoly& f);
// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);
ZPoly reverse(const ZPoly& f);
ZPoly substitute_neg(const ZPoly& f);  // f(-X)

// sign(f(0)) * X^deg f * f(1/X). Monic when f is monic with f(0) = +-1.
ZPoly star(const ZPoly& f);
bool is_symmetric(const ZPoly& f);
bool is_palindromic(const ZPoly& f);

// Sylvester determinant sign convention.
ZInt resultant(const ZPoly& f, const ZPoly& g);
ZPoly gcd_z(const ZPoly& f, const ZPoly& g);

ZPoly cyclotomic(unsigned m);
// Monic P with P(X^2) = (-1)^deg S * S(X) S(-X).
ZPoly graeffe_square(const ZPoly& s);
// Monic polynomial whose roots are the m-th powers of the roots of s.
ZPoly power_charpoly(const ZPoly& s, unsigned m);
// For palindromic f of degree 2k, the T of degree k with f = X^k T(X + 1/X).
ZPoly trace_poly(const ZPoly& f);
// Inverse of trace_poly: X^k T(X + 1/X) expanded.
ZPoly untrace_poly(const ZPoly& t);

bool is_perfect_square(const ZInt& n);

}  // namespace k3iso
