#include "k3iso/fpfactor.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "k3iso/errors.hpp"

namespace k3iso {

namespace fp {

u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s < a || s >= p) s -= p;
    return s;
}

u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 mulm(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) {
    if (a % p == 0) throw Error(ErrorKind::ZeroDivisor, "inverse of zero mod p");
    return powm(a, p - 2, p);
}

}  // namespace fp

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these bases are deterministic below 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = fp::powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = fp::mulm(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool canonical_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::string FpPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        u64 v = c_[i];
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << v;
            continue;
        }
        if (v != 1) os << v << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace fp {

FpPoly one(u64 p) { return FpPoly(p, {1}); }
FpPoly x(u64 p) { return FpPoly(p, {0, 1}); }

FpPoly add(const FpPoly& a, const FpPoly& b) {
    const u64 p = a.modulus();
    std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = addm(a.coeff(i), b.coeff(i), p);
    return FpPoly(p, std::move(r));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    const u64 p = a.modulus();
    std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = subm(a.coeff(i), b.coeff(i), p);
    return FpPoly(p, std::move(r));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    const u64 p = a.modulus();
    if (a.is_zero() || b.is_zero()) return FpPoly(p, {});
    std::vector<u64> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        u64 ai = a.coeffs()[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] = addm(r[i + j], mulm(ai, b.coeffs()[j], p), p);
    }
    return FpPoly(p, std::move(r));
}

FpPoly scale(const FpPoly& a, u64 k) {
    std::vector<u64> r = a.coeffs();
    for (auto& v : r) v = mulm(v, k, a.modulus());
    return FpPoly(a.modulus(), std::move(r));
}

void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    const u64 p = a.modulus();
    if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero in F_p[X]");
    if (a.degree() < b.degree()) {
        q = FpPoly(p, {});
        r = a;
        return;
    }
    std::vector<u64> rem = a.coeffs();
    const int db = b.degree();
    std::vector<u64> quo(a.degree() - db + 1, 0);
    const u64 inv = invm(b.lead(), p);
    for (int i = a.degree() - db; i >= 0; --i) {
        u64 t = mulm(rem[i + db], inv, p);
        if (!t) continue;
        quo[i] = t;
        for (int j = 0; j <= db; ++j) rem[i + j] = subm(rem[i + j], mulm(t, b.coeffs()[j], p), p);
    }
    rem.resize(db);
    q = FpPoly(p, std::move(quo));
    r = FpPoly(p, std::move(rem));
}

FpPoly rem(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    divrem(a, b, q, r);
    return r;
}

FpPoly monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    return scale(a, invm(a.lead(), a.modulus()));
}

FpPoly gcd(const FpPoly& a0, const FpPoly& b0) {
    FpPoly a = a0, b = b0;
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FpPoly xgcd(const FpPoly& a0, const FpPoly& b0, FpPoly& s, FpPoly& t) {
    const u64 p = a0.modulus();
    FpPoly r0 = a0, r1 = b0;
    FpPoly s0 = one(p), s1(p, {}), t0(p, {}), t1 = one(p);
    while (!r1.is_zero()) {
        FpPoly q, r;
        divrem(r0, r1, q, r);
        FpPoly s2 = sub(s0, mul(q, s1));
        FpPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    u64 inv = invm(r0.lead(), p);
    s = scale(s0, inv);
    t = scale(t0, inv);
    return scale(r0, inv);
}

FpPoly derivative(const FpPoly& a) {
    const u64 p = a.modulus();
    if (a.degree() < 1) return FpPoly(p, {});
    std::vector<u64> d(a.degree());
    for (int i = 1; i <= a.degree(); ++i) d[i - 1] = mulm(a.coeffs()[i], static_cast<u64>(i) % p, p);
    return FpPoly(p, std::move(d));
}

FpPoly powmod(const FpPoly& a, u64 e, const FpPoly& m) {
    FpPoly r = rem(one(a.modulus()), m);
    FpPoly b = rem(a, m);
    while (e) {
        if (e & 1) r = rem(mul(r, b), m);
        e >>= 1;
        if (e) b = rem(mul(b, b), m);
    }
    return r;
}

}  // namespace fp

FpPoly reduce_mod(const ZPoly& f, u64 p) {
    if (!is_prime_u64(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    ZInt P;
    mpz_import(P.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    std::vector<u64> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        ZInt r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
        u64 w = 0;
        mpz_export(&w, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
        c.push_back(w);
    }
    return FpPoly(p, std::move(c));
}

ZPoly lift_symmetric(const FpPoly& f) {
    const u64 p = f.modulus();
    std::vector<ZInt> c;
    for (u64 v : f.coeffs()) {
        ZInt z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
        if (v > p / 2) {
            ZInt P;
            mpz_import(P.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
            z -= P;
        }
        c.push_back(z);
    }
    return ZPoly(std::move(c));
}

namespace {

using FactorList = std::vector<std::pair<FpPoly, int>>;

// f monic and nonconstant.
void squarefree_fp(const FpPoly& f, int mult, FactorList& out) {
    const u64 p = f.modulus();
    FpPoly g = fp::gcd(f, fp::derivative(f));
    FpPoly w, r;
    fp::divrem(f, g, w, r);
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp::gcd(w, g);
        FpPoly z;
        fp::divrem(w, y, z, r);
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        FpPoly gq;
        fp::divrem(g, y, gq, r);
        g = gq;
    }
    if (g.degree() > 0) {
        // g is a p-th power: take the p-th root coefficientwise (Frobenius is the identity on F_p)
        std::vector<u64> root;
        for (int k = 0; k <= g.degree(); k += static_cast<int>(p)) root.push_back(g.coeff(k));
        squarefree_fp(FpPoly(p, std::move(root)), mult * static_cast<int>(p), out);
    }
}

FpPoly random_poly(u64 p, int deg_below, std::mt19937_64& rng) {
    std::vector<u64> c(deg_below);
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (auto& v : c) v = dist(rng);
    return FpPoly(p, std::move(c));
}

// Cantor-Zassenhaus: g squarefree monic, product of irreducibles of degree d.
void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const u64 p = g.modulus();
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    for (;;) {
        FpPoly a = random_poly(p, g.degree(), rng);
        if (a.degree() < 1) continue;
        FpPoly b;
        if (p == 2) {
            // trace map to F_2
            FpPoly t = a, acc = a;
            for (int i = 1; i < d; ++i) {
                t = fp::rem(fp::mul(t, t), g);
                acc = fp::add(acc, t);
            }
            b = acc;
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            FpPoly t = a, acc = fp::rem(a, g);
            for (int i = 1; i < d; ++i) {
                t = fp::powmod(t, p, g);
                acc = fp::rem(fp::mul(acc, t), g);
            }
            b = fp::sub(fp::powmod(acc, (p - 1) / 2, g), fp::one(p));
        }
        FpPoly c = fp::gcd(b, g);
        if (c.degree() > 0 && c.degree() < g.degree()) {
            FpPoly q, r;
            fp::divrem(g, c, q, r);
            equal_degree(c, d, rng, out);
            equal_degree(fp::monic(q), d, rng, out);
            return;
        }
    }
}

void distinct_degree(const FpPoly& f0, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const u64 p = f0.modulus();
    FpPoly f = f0;
    FpPoly h = fp::rem(fp::x(p), f);
    int d = 1;
    while (f.degree() >= 2 * d) {
        h = fp::powmod(h, p, f);
        FpPoly g = fp::gcd(fp::sub(h, fp::x(p)), f);
        if (g.degree() > 0) {
            equal_degree(g, d, rng, out);
            FpPoly q, r;
            fp::divrem(f, g, q, r);
            f = q;
            h = fp::rem(h, f);
        }
        ++d;
    }
    if (f.degree() > 0) out.push_back(fp::monic(f));
}

u64 seed_for(const FpPoly& f) {
    // FNV-1a over (p, coeffs)
    u64 h = 1469598103934665603ull;
    auto mix = [&](u64 v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(f.modulus());
    for (u64 v : f.coeffs()) mix(v);
    return h;
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor_mod_p(const FpPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "factor_mod_p of the zero polynomial");
    FactorList out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed_for(f));
    FactorList sqf;
    squarefree_fp(fp::monic(f), 1, sqf);
    for (auto& [part, mult] : sqf) {
        std::vector<FpPoly> irr;
        distinct_degree(part, rng, irr);
        for (auto& h : irr) out.emplace_back(h, mult);
    }
    // merge repeated factors (a factor can only appear once per squarefree part, but parts
    // coming from p-th roots may coincide with earlier ones)
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return canonical_less(a.first, b.first);
        return a.second < b.second;
    });
    FactorList merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
    }
    return merged;
}

bool is_irreducible_mod_p(const FpPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_mod_p(f);
    return fac.size() == 1 && fac[0].second == 1;
}

FpPoly star_mod_p(const FpPoly& h) {
    const u64 p = h.modulus();
    if (h.coeff(0) == 0) throw Error(ErrorKind::ZeroConstantTerm, "star_mod_p needs h(0) != 0");
    std::vector<u64> r(h.coeffs().rbegin(), h.coeffs().rend());
    u64 inv = fp::invm(h.coeff(0), p);
    for (auto& v : r) v = fp::mulm(v, inv, p);
    return FpPoly(p, std::move(r));
}

bool is_symmetric_mod_p(const FpPoly& h) { return star_mod_p(h) == h; }

std::vector<CommonFactor> common_irreducible_factors(const ZPoly& f, const ZPoly& g, u64 p) {
    FpPoly a = reduce_mod(f, p), b = reduce_mod(g, p);
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::InvalidQuery, "reduction mod " + std::to_string(p) + " vanishes");
    FpPoly c = fp::gcd(a, b);
    std::vector<CommonFactor> out;
    if (c.degree() < 1) return out;
    for (auto& [h, m] : factor_mod_p(c)) {
        (void)m;
        CommonFactor cf;
        cf.factor = h;
        cf.symmetric = h.coeff(0) != 0 && is_symmetric_mod_p(h);
        out.push_back(cf);
    }
    return out;
}

std::vector<FpPoly> common_symmetric_irreducible_factors(const ZPoly& f, const ZPoly& g, u64 p) {
    std::vector<FpPoly> out;
    for (auto& cf : common_irreducible_factors(f, g, p))
        if (cf.symmetric) out.push_back(cf.factor);
    return out;
}

}  // namespace k3iso
