#include "k3iso/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "k3iso/errors.hpp"

namespace k3iso {

ZPoly::ZPoly(std::vector<ZInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

ZPoly ZPoly::constant(const ZInt& c) { return ZPoly(std::vector<ZInt>{c}); }

ZPoly ZPoly::monomial(const ZInt& c, int k) {
    std::vector<ZInt> v(k + 1);
    v[k] = c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::from_longs(const std::vector<long>& coeffs) {
    std::vector<ZInt> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return ZPoly(std::move(v));
}

void ZPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZInt ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const ZInt& ZPoly::lead() const {
    static const ZInt zero = 0;
    return c_.empty() ? zero : c_.back();
}

ZInt ZPoly::eval(const ZInt& a) const {
    ZInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

QNum ZPoly::eval(const QNum& a) const {
    // Horner on numerator and denominator separately keeps everything integral.
    if (c_.empty()) return 0;
    const ZInt& p = a.get_num();
    const ZInt& q = a.get_den();
    ZInt acc = 0;
    ZInt qpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * p + *it * qpow;
        qpow *= q;
    }
    // acc = q^deg f(p/q); qpow = q^(deg+1)
    QNum r(acc, qpow / q);
    r.canonicalize();
    return r;
}

int ZPoly::sign_at(const QNum& a) const {
    if (c_.empty()) return 0;
    const ZInt& p = a.get_num();
    const ZInt& q = a.get_den();
    ZInt acc = 0;
    ZInt qpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * p + *it * qpow;
        qpow *= q;
    }
    return sgn(acc);
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<ZInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(r));
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
    *this = *this * o;
    return *this;
}

ZPoly& ZPoly::operator*=(const ZInt& k) {
    for (auto& v : c_) v *= k;
    normalize();
    return *this;
}

bool canonical_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(),
                                        [](const ZInt& x, const ZInt& y) { return cmp(x, y) < 0; });
}

std::string ZPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const ZInt& v = c_[i];
        if (v == 0) continue;
        ZInt a = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::vector<std::string> ZPoly::coeff_strings() const {
    std::vector<std::string> out;
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

ZPoly pow(const ZPoly& f, unsigned n) {
    ZPoly r = ZPoly::constant(1);
    ZPoly b = f;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

bool try_divide(const ZPoly& f, const ZPoly& g, ZPoly& q) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
    if (f.is_zero()) {
        q = ZPoly();
        return true;
    }
    if (f.degree() < g.degree()) return false;
    std::vector<ZInt> rem = f.coeffs();
    const int dg = g.degree();
    const ZInt& lg = g.lead();
    std::vector<ZInt> quo(f.degree() - dg + 1);
    for (int i = f.degree() - dg; i >= 0; --i) {
        ZInt& top = rem[i + dg];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return false;
        ZInt t = top / lg;
        quo[i] = t;
        for (int j = 0; j <= dg; ++j) rem[i + j] -= t * g.coeffs()[j];
    }
    for (int i = 0; i < dg; ++i)
        if (rem[i] != 0) return false;
    q = ZPoly(std::move(quo));
    return true;
}

ZPoly exact_divide(const ZPoly& f, const ZPoly& g) {
    ZPoly q;
    if (!try_divide(f, g, q))
        throw Error(ErrorKind::NotDivisible, "(" + g.str() + ") does not divide (" + f.str() + ")");
    return q;
}

void pseudo_divrem(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "pseudo-division by the zero polynomial");
    const int dg = g.degree();
    if (f.degree() < dg) {
        q = ZPoly();
        r = f;
        return;
    }
    const int e = f.degree() - dg + 1;
    std::vector<ZInt> rem = f.coeffs();
    std::vector<ZInt> quo(e);
    const ZInt& lg = g.lead();
    for (int i = f.degree() - dg; i >= 0; --i) {
        ZInt t = rem[i + dg];
        for (auto& v : rem) v *= lg;
        for (auto& v : quo) v *= lg;
        quo[i] += t;
        for (int j = 0; j <= dg; ++j) rem[i + j] -= t * g.coeffs()[j];
    }
    rem.resize(dg);
    q = ZPoly(std::move(quo));
    r = ZPoly(std::move(rem));
}

void monic_divrem(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
    const int dg = g.degree();
    if (f.degree() < dg) {
        q = ZPoly();
        r = f;
        return;
    }
    std::vector<ZInt> rem = f.coeffs();
    std::vector<ZInt> quo(f.degree() - dg + 1);
    for (int i = f.degree() - dg; i >= 0; --i) {
        ZInt t = rem[i + dg];
        if (t == 0) continue;
        quo[i] = t;
        for (int j = 0; j <= dg; ++j) rem[i + j] -= t * g.coeffs()[j];
    }
    rem.resize(dg);
    q = ZPoly(std::move(quo));
    r = ZPoly(std::move(rem));
}

ZPoly derivative(const ZPoly& f) {
    if (f.degree() < 1) return ZPoly();
    std::vector<ZInt> d(f.degree());
    for (int i = 1; i <= f.degree(); ++i) d[i - 1] = f.coeffs()[i] * i;
    return ZPoly(std::move(d));
}

ZInt content(const ZPoly& f) {
    ZInt g = 0;
    for (const auto& v : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    ZInt c = content(f);
    if (f.lead() < 0) c = -c;
    std::vector<ZInt> v = f.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return ZPoly(std::move(v));
}

ZPoly reverse(const ZPoly& f) {
    std::vector<ZInt> v = f.coeffs();
    std::reverse(v.begin(), v.end());
    return ZPoly(std::move(v));
}

ZPoly substitute_neg(const ZPoly& f) {
    std::vector<ZInt> v = f.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return ZPoly(std::move(v));
}

ZPoly star(const ZPoly& f) {
    const ZInt c0 = f.constant_term();
    if (c0 == 0) throw Error(ErrorKind::ZeroConstantTerm, "star needs f(0) != 0, got " + f.str());
    ZPoly r = reverse(f);
    if (c0 < 0) r = -r;
    return r;
}

bool is_symmetric(const ZPoly& f) { return star(f) == f; }

bool is_palindromic(const ZPoly& f) { return reverse(f) == f && f.constant_term() != 0; }

namespace {

ZInt ipow(const ZInt& b, unsigned long e) {
    ZInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

ZInt resultant(const ZPoly& f0, const ZPoly& g0) {
    if (f0.is_zero() || g0.is_zero())
        throw Error(ErrorKind::ZeroDivisor, "resultant with the zero polynomial");
    ZPoly a = f0, b = g0;
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    }
    if (b.degree() == 0) return s * ipow(b.lead(), a.degree());

    // Subresultant PRS (Collins / Brown), contents handled up front.
    ZInt ca = content(a), cb = content(b);
    ZInt t = ipow(ca, b.degree()) * ipow(cb, a.degree());
    {
        std::vector<ZInt> va = a.coeffs(), vb = b.coeffs();
        for (auto& v : va) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ca.get_mpz_t());
        for (auto& v : vb) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cb.get_mpz_t());
        a = ZPoly(std::move(va));
        b = ZPoly(std::move(vb));
    }
    ZInt g = 1, h = 1;
    for (;;) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        ZPoly q, r;
        pseudo_divrem(a, b, q, r);
        if (r.is_zero()) return 0;
        a = b;
        ZInt div = g * ipow(h, delta);
        std::vector<ZInt> vr = r.coeffs();
        for (auto& v : vr) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
        b = ZPoly(std::move(vr));
        g = a.lead();
        // h <- g^delta / h^(delta-1)
        if (delta > 0) {
            ZInt num = ipow(g, delta);
            ZInt den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0) {
            const int da = a.degree();
            ZInt num = ipow(b.lead(), da);
            ZInt den = ipow(h, da - 1);
            ZInt hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * hh;
        }
    }
}

ZPoly gcd_z(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() && g.is_zero()) return ZPoly();
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);
    ZPoly a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly q, r;
        pseudo_divrem(a, b, q, r);
        a = b;
        b = primitive_part(r);
    }
    return primitive_part(a);
}

ZPoly cyclotomic(unsigned m) {
    if (m == 0) throw Error(ErrorKind::InvalidQuery, "cyclotomic index must be positive");
    // Phi_m = prod over d | m of (X^d - 1)^mu(m/d)
    auto mobius = [](unsigned n) {
        int mu = 1;
        for (unsigned q = 2; q * q <= n; ++q) {
            if (n % q) continue;
            n /= q;
            if (n % q == 0) return 0;
            mu = -mu;
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    ZPoly num = ZPoly::constant(1), den = ZPoly::constant(1);
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d) continue;
        int mu = mobius(m / d);
        if (mu == 0) continue;
        ZPoly term = ZPoly::monomial(1, static_cast<int>(d)) - ZPoly::constant(1);
        if (mu > 0) num *= term;
        else den *= term;
    }
    return exact_divide(num, den);
}

ZPoly graeffe_square(const ZPoly& s) {
    if (!s.is_monic()) throw Error(ErrorKind::InvalidQuery, "graeffe_square needs a monic input");
    ZPoly prod = s * substitute_neg(s);
    std::vector<ZInt> v;
    for (int i = 0; i <= prod.degree(); i += 2) v.push_back(prod.coeffs()[i]);
    ZPoly p(std::move(v));
    if (s.degree() & 1) p = -p;
    return p;
}

ZPoly power_charpoly(const ZPoly& s, unsigned m) {
    if (!s.is_monic()) throw Error(ErrorKind::InvalidQuery, "power_charpoly needs a monic input");
    if (m == 0) throw Error(ErrorKind::InvalidQuery, "power_charpoly needs m >= 1");
    if (m == 1) return s;
    const int n = s.degree();
    // e_k of the roots: s = sum (-1)^k e_k X^(n-k)
    std::vector<ZInt> e(n + 1);
    for (int k = 0; k <= n; ++k) e[k] = (k & 1) ? ZInt(-s.coeff(n - k)) : s.coeff(n - k);
    // Newton: power sums p_1..p_{n m}
    const int top = n * static_cast<int>(m);
    std::vector<ZInt> p(top + 1);
    for (int j = 1; j <= top; ++j) {
        ZInt acc = 0;
        for (int i = 1; i < j && i <= n; ++i) {
            ZInt term = e[i] * p[j - i];
            if (i & 1) acc += term;
            else acc -= term;
        }
        if (j <= n) {
            ZInt term = e[j] * j;
            if (j & 1) acc += term;
            else acc -= term;
        }
        p[j] = acc;
    }
    // power sums of the m-th powers, then back to elementary symmetric functions
    std::vector<ZInt> q(n + 1);
    for (int j = 1; j <= n; ++j) q[j] = p[j * m];
    std::vector<ZInt> f(n + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k) {
        ZInt acc = 0;
        for (int i = 1; i <= k; ++i) {
            ZInt term = f[k - i] * q[i];
            if (i & 1) acc += term;
            else acc -= term;
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
            throw Error(ErrorKind::NotDivisible, "Newton identity produced a non-integer");
        mpz_divexact_ui(f[k].get_mpz_t(), acc.get_mpz_t(), k);
    }
    std::vector<ZInt> c(n + 1);
    for (int k = 0; k <= n; ++k) c[n - k] = (k & 1) ? ZInt(-f[k]) : f[k];
    return ZPoly(std::move(c));
}

namespace {

ZInt binom(unsigned n, unsigned k) {
    ZInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

ZPoly trace_poly(const ZPoly& f) {
    if (f.is_zero() || (f.degree() & 1) || !is_palindromic(f))
        throw Error(ErrorKind::NotSymmetricEven, "trace_poly needs a palindromic even-degree input, got " + f.str());
    const int k = f.degree() / 2;
    // Laurent coefficients for exponents -k..k live at index e + k.
    std::vector<ZInt> lau = f.coeffs();
    std::vector<ZInt> t(k + 1);
    for (int j = k; j >= 0; --j) {
        ZInt a = lau[j + k];
        if (a == 0) continue;
        t[j] = a;
        // subtract a (x + 1/x)^j
        for (int i = 0; i <= j; ++i) lau[(j - 2 * i) + k] -= a * binom(j, i);
    }
    return ZPoly(std::move(t));
}

ZPoly untrace_poly(const ZPoly& t) {
    const int k = t.degree();
    if (k < 0) return ZPoly();
    std::vector<ZInt> out(2 * k + 1);
    for (int j = 0; j <= k; ++j) {
        const ZInt& a = t.coeffs()[j];
        if (a == 0) continue;
        for (int i = 0; i <= j; ++i) out[(j - 2 * i) + k] += a * binom(j, i);
    }
    return ZPoly(std::move(out));
}

bool is_perfect_square(const ZInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace k3iso
