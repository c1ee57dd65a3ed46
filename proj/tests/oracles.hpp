#pragma once

// Reference implementations used only by tests. They share nothing with the
// library algorithms beyond the GMP integer type.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Coeffs = std::vector<Z>;  // ascending

inline void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coeffs schoolbook_mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Z horner(const Coeffs& c, const Z& x) {
    Z acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Determinant by fraction-free Gaussian elimination.
inline Z bareiss_det(std::vector<std::vector<Z>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Z sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Z t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// det of the Sylvester matrix of f (degree m) and g (degree n), rows of f first.
inline Z sylvester_resultant(const Coeffs& f, const Coeffs& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t N = m + n;
    if (N == 0) return 1;
    std::vector<std::vector<Z>> M(N, std::vector<Z>(N, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = g[n - j];
    return bareiss_det(M);
}

// ---- F_p with small p, polynomials as ascending vectors of residues ----

using Fp = std::vector<std::uint64_t>;

inline void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline Fp fp_rem(Fp a, const Fp& b, std::uint64_t p) {
    trim(a);
    const std::uint64_t il = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t q = a.back() * il % p;
        const std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = (a[sh + i] + p - q * b[i] % p) % p;
        trim(a);
    }
    return a;
}

inline Fp fp_mul(const Fp& a, const Fp& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline Fp reduce(const Coeffs& f, std::uint64_t p) {
    Fp r;
    for (const auto& c : f) {
        Z m;
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
        r.push_back(m.get_ui());
    }
    trim(r);
    return r;
}

// All monic polynomials of degree d over F_p, enumerated as base-p counters.
inline std::vector<Fp> monic_of_degree(int d, std::uint64_t p) {
    std::vector<Fp> out;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t n = 0; n < total; ++n) {
        Fp f(d + 1, 0);
        f[d] = 1;
        std::uint64_t x = n;
        for (int i = 0; i < d; ++i) {
            f[i] = x % p;
            x /= p;
        }
        out.push_back(f);
    }
    return out;
}

// Irreducible iff no monic divisor of degree 1..d/2.
inline bool irreducible_by_trial(const Fp& f, std::uint64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int k = 1; 2 * k <= d; ++k)
        for (const auto& g : monic_of_degree(k, p))
            if (fp_rem(f, g, p).empty()) return false;
    return d >= 1;
}

// h(0)^-1 X^deg h(1/X)
inline Fp star(const Fp& h, std::uint64_t p) {
    Fp r(h.rbegin(), h.rend());
    const std::uint64_t s = inv_mod(h[0], p);
    for (auto& c : r) c = c * s % p;
    return r;
}

// Monic symmetric h of degree d over F_p: h(0)^2 = 1 and h_{d-i} = h(0) h_i.
inline std::vector<Fp> symmetric_monic_of_degree(int d, std::uint64_t p) {
    std::vector<Fp> out;
    std::vector<std::uint64_t> h0s{1};
    if (p > 2) h0s.push_back(p - 1);
    const int free_lo = 1, free_hi = (d - 1) / 2;  // h_1..h_free_hi chosen freely
    const bool has_mid = d % 2 == 0 && d > 0;
    for (auto h0 : h0s) {
        const int nfree = std::max(0, free_hi - free_lo + 1) + (has_mid && h0 == 1 ? 1 : 0);
        std::uint64_t total = 1;
        for (int i = 0; i < nfree; ++i) total *= p;
        for (std::uint64_t n = 0; n < total; ++n) {
            Fp h(d + 1, 0);
            h[0] = h0;
            h[d] = 1;
            std::uint64_t x = n;
            for (int i = free_lo; i <= free_hi; ++i) {
                h[i] = x % p;
                x /= p;
                h[d - i] = h0 * h[i] % p;
            }
            if (has_mid && h0 == 1) h[d / 2] = x % p;
            if (star(h, p) == h) out.push_back(h);
        }
    }
    return out;
}

// Monic irreducible symmetric h with deg h <= maxdeg dividing both reductions.
inline std::vector<Fp> brute_common_symmetric(const Coeffs& f, const Coeffs& g, std::uint64_t p, int maxdeg) {
    const Fp a = reduce(f, p), b = reduce(g, p);
    std::vector<Fp> out;
    for (int d = 1; d <= maxdeg; ++d)
        for (const auto& h : symmetric_monic_of_degree(d, p)) {
            if (!fp_rem(a, h, p).empty() || !fp_rem(b, h, p).empty()) continue;
            if (!irreducible_by_trial(h, p)) continue;
            out.push_back(h);
        }
    return out;
}

// ---- real roots by Descartes sign variations and bisection ----

inline int sign_variations(const Coeffs& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline Coeffs taylor_shift1(Coeffs c) {  // f(x + 1)
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
    return c;
}

inline Coeffs reversed(const Coeffs& c) { return Coeffs(c.rbegin(), c.rend()); }

// Roots in (0, 1) of a squarefree polynomial, via (x+1)^n f(1/(x+1)) and halving.
inline int roots_in_unit(const Coeffs& f, int depth = 0) {
    const Coeffs g = taylor_shift1(reversed(f));
    const int v = sign_variations(g);
    if (v <= 1 || depth > 200) return v;
    // halves: 2^n f(x/2) and its shift f((x+1)/2); a root at 1/2 is counted once
    Coeffs half = f;  // 2^n f(x/2)
    const std::size_t n = f.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
        Z t;
        mpz_mul_2exp(t.get_mpz_t(), f[i].get_mpz_t(), n - i);
        half[i] = t;
    }
    const Coeffs right = taylor_shift1(half);
    int mid = right.empty() || right[0] != 0 ? 0 : 1;
    Coeffs r2 = right;
    if (mid) r2.erase(r2.begin());
    return roots_in_unit(half, depth + 1) + roots_in_unit(r2, depth + 1) + mid;
}

// Positive real roots: x in (0,1), x = 1, and x > 1 as roots of f(1/x) in (0,1).
inline int positive_roots(Coeffs f) {
    trim(f);
    while (!f.empty() && f[0] == 0) f.erase(f.begin());
    if (f.size() <= 1) return 0;
    int at1 = horner(f, 1) == 0 ? 1 : 0;
    return roots_in_unit(f) + at1 + roots_in_unit(reversed(f));
}

inline int real_roots_squarefree(const Coeffs& f) {
    Coeffs neg = f;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    return positive_roots(f) + positive_roots(neg) + (f.size() > 1 && f[0] == 0 ? 1 : 0);
}

inline Coeffs random_poly(std::mt19937_64& rng, int deg, long bound, bool monic) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Coeffs c(deg + 1);
    for (auto& x : c) x = d(rng);
    if (monic) c[deg] = 1;
    while (c[deg] == 0) c[deg] = d(rng);
    return c;
}

}  // namespace oracle
