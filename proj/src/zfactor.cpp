#include "k3iso/zfactor.hpp"

#include <algorithm>

#include "k3iso/errors.hpp"
#include "k3iso/fpfactor.hpp"

namespace k3iso {

ZPoly FactorDecomposition::reconstruct() const {
    ZPoly r = ZPoly::constant(unit);
    for (const auto& [f, m] : factors) r *= pow(f, static_cast<unsigned>(m));
    return r;
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "squarefree decomposition of zero");
    std::vector<std::pair<ZPoly, int>> out;
    ZInt c = content(f);
    if (f.lead() < 0) c = -c;
    if (c != 1) out.emplace_back(ZPoly::constant(c), 1);
    if (f.degree() == 0) return out;

    ZPoly a = primitive_part(f);
    ZPoly da = derivative(a);
    ZPoly g = gcd_z(a, da);
    ZPoly w = exact_divide(a, g);
    ZPoly y = exact_divide(da, g);
    ZPoly z = y - derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        ZPoly h = gcd_z(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = exact_divide(w, h);
        y = exact_divide(z, h);
        z = y - derivative(w);
        ++i;
    }
    return out;
}

namespace {

ZInt to_z(u64 v) {
    ZInt z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
    return z;
}

ZPoly lift_nonneg(const FpPoly& f) {
    std::vector<ZInt> c;
    for (u64 v : f.coeffs()) c.push_back(to_z(v));
    return ZPoly(std::move(c));
}

ZPoly mod_poly(const ZPoly& f, const ZInt& m) {
    std::vector<ZInt> c = f.coeffs();
    for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return ZPoly(std::move(c));
}

ZPoly symmod_poly(const ZPoly& f, const ZInt& m) {
    ZInt half = m / 2;
    std::vector<ZInt> c = f.coeffs();
    for (auto& v : c) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half) v -= m;
    }
    return ZPoly(std::move(c));
}

// remainder of a modulo monic b, coefficients reduced mod m
void divrem_mod(const ZPoly& a, const ZPoly& b, const ZInt& m, ZPoly& q, ZPoly& r) {
    monic_divrem(mod_poly(a, m), b, q, r);
    q = mod_poly(q, m);
    r = mod_poly(r, m);
}

struct HenselState {
    ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
// Returns the same relations modulo m^2.
HenselState hensel_step(const ZPoly& f, const HenselState& st, const ZInt& m) {
    const ZInt m2 = m * m;
    ZPoly e = mod_poly(f - st.g * st.h, m2);
    ZPoly q, r;
    divrem_mod(st.s * e, st.h, m2, q, r);
    ZPoly g2 = mod_poly(st.g + st.t * e + q * st.g, m2);
    ZPoly h2 = mod_poly(st.h + r, m2);
    ZPoly b = mod_poly(st.s * g2 + st.t * h2 - ZPoly::constant(1), m2);
    ZPoly c, d;
    divrem_mod(st.s * b, h2, m2, c, d);
    ZPoly s2 = mod_poly(st.s - d, m2);
    ZPoly t2 = mod_poly(st.t - st.t * b - c * g2, m2);
    return {g2, h2, s2, t2};
}

FpPoly product_fp(const std::vector<FpPoly>& v, u64 p) {
    FpPoly r = fp::one(p);
    for (const auto& x : v) r = fp::mul(r, x);
    return r;
}

// Lifts f = lc(f) * prod(facs) mod p to monic factors modulo p^(2^steps).
void multi_lift(const ZPoly& f, const std::vector<FpPoly>& facs, u64 p, int steps, const ZInt& M,
                std::vector<ZPoly>& out) {
    if (facs.size() == 1) {
        ZInt inv;
        ZInt lc = f.lead();
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
        out.push_back(mod_poly(f * inv, M));
        return;
    }
    const std::size_t half = facs.size() / 2;
    std::vector<FpPoly> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
    FpPoly lcp = reduce_mod(ZPoly::constant(f.lead()), p);
    FpPoly g0 = fp::mul(lcp, product_fp(left, p));
    FpPoly h0 = product_fp(right, p);
    FpPoly s0, t0;
    fp::xgcd(g0, h0, s0, t0);
    HenselState st{lift_nonneg(g0), lift_nonneg(h0), lift_nonneg(s0), lift_nonneg(t0)};
    ZInt m = to_z(p);
    for (int i = 0; i < steps; ++i) {
        st = hensel_step(f, st, m);
        m = m * m;
    }
    multi_lift(symmod_poly(st.g, M), left, p, steps, M, out);
    multi_lift(symmod_poly(st.h, M), right, p, steps, M, out);
}

// Prime selection: first three primes p with p not dividing lc(f) and f squarefree mod p;
// keep the one with the fewest modular factors.
u64 choose_prime(const ZPoly& f, std::vector<FpPoly>& best_factors) {
    int tried = 0;
    u64 best_p = 0;
    std::size_t best_n = 0;
    for (u64 p = 2; tried < 3; ++p) {
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
        FpPoly fb = reduce_mod(f, p);
        if (fp::gcd(fb, fp::derivative(fb)).degree() > 0) continue;
        ++tried;
        auto fac = factor_mod_p(fb);
        if (best_p == 0 || fac.size() < best_n) {
            best_p = p;
            best_n = fac.size();
            best_factors.clear();
            for (auto& e : fac) best_factors.push_back(e.first);
        }
        if (best_n == 1) break;
    }
    return best_p;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// f primitive, positive leading coefficient, squarefree, degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    if (f.degree() == 1) return {f};
    std::vector<FpPoly> modfac;
    const u64 p = choose_prime(f, modfac);
    if (modfac.size() <= 1) return {f};

    // Mignotte: any factor g of f satisfies |g_i| <= 2^deg f * ||f||_2; the recombination
    // candidates are lc(f)/lc(g) * g, so B = lc(f) 2^n ||f||_2 bounds their coefficients.
    ZInt norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    ZInt root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    ZInt B = abs(f.lead()) * root;
    mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), f.degree());
    ZInt bound = 2 * B + 1;
    int steps = 0;
    ZInt M = to_z(p);
    while (M < bound) {
        M = M * M;
        ++steps;
    }
    std::vector<ZPoly> lifted;
    multi_lift(f, modfac, p, steps, M, lifted);

    std::vector<ZPoly> result;
    std::vector<ZPoly> T = lifted;
    ZPoly fstar = f;
    int s = 1;
    while (2 * s <= static_cast<int>(T.size())) {
        std::vector<std::vector<int>> subs;
        std::vector<int> cur;
        subsets(static_cast<int>(T.size()), s, 0, cur, subs);
        bool found = false;
        for (const auto& S : subs) {
            ZPoly g = ZPoly::constant(fstar.lead());
            for (int i : S) g = mod_poly(g * T[i], M);
            g = primitive_part(symmod_poly(g, M));
            if (g.degree() < 1) continue;
            ZPoly q;
            if (try_divide(fstar, g, q)) {
                result.push_back(g);
                fstar = primitive_part(q);
                std::vector<ZPoly> rest;
                for (int i = 0; i < static_cast<int>(T.size()); ++i)
                    if (std::find(S.begin(), S.end(), i) == S.end()) rest.push_back(T[i]);
                T = rest;
                found = true;
                break;
            }
        }
        if (!found) ++s;
    }
    if (fstar.degree() > 0) result.push_back(fstar);
    return result;
}

}  // namespace

FactorDecomposition factor_over_z(const ZPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "factorization of the zero polynomial");
    FactorDecomposition out;
    out.unit = content(f);
    if (f.lead() < 0) out.unit = -out.unit;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        if (part.degree() < 1) continue;
        for (auto& g : zassenhaus(part)) out.factors.emplace_back(g, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

bool is_irreducible_z(const ZPoly& f) {
    if (f.degree() < 1) return false;
    auto d = factor_over_z(f);
    return d.factors.size() == 1 && d.factors[0].second == 1 && (d.unit == 1 || d.unit == -1);
}

unsigned euler_phi(unsigned m) {
    unsigned r = m;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        r -= r / q;
    }
    if (m > 1) r -= r / m;
    return r;
}

std::optional<unsigned> cyclotomic_index(const ZPoly& f) {
    if (!f.is_monic() || f.degree() < 1) return std::nullopt;
    const unsigned n = static_cast<unsigned>(f.degree());
    // phi(m) >= sqrt(m/2), so phi(m) = n forces m <= 2 n^2
    for (unsigned m = 1; m <= 2 * n * n + 2; ++m) {
        if (euler_phi(m) != n) continue;
        if (cyclotomic(m) == f) return m;
    }
    return std::nullopt;
}

}  // namespace k3iso
