#include "k3iso/intfactor.hpp"

#include <algorithm>
#include <map>

#include "k3iso/errors.hpp"

namespace k3iso {

namespace {

bool probably_prime(const ZInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's cycle finding with batched gcds; returns a nontrivial factor or 0.
ZInt rho(const ZInt& n, unsigned long c) {
    ZInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const ZInt& v) {
        ZInt t = v * v + c;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                ZInt d = abs(x - y);
                q = q * d % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
        if (r > (1ul << 26)) return 0;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            ZInt d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void split(const ZInt& n, std::map<ZInt, int>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        ZInt r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split(r, out);
        split(r, out);
        return;
    }
    for (unsigned long c = 1; c < 64; ++c) {
        ZInt d = rho(n, c);
        if (d != 0) {
            split(d, out);
            split(n / d, out);
            return;
        }
    }
    throw Error(ErrorKind::FactorizationIncomplete, "could not split " + n.get_str());
}

}  // namespace

std::vector<std::pair<ZInt, int>> factor_integer(const ZInt& n0) {
    if (n0 == 0) throw Error(ErrorKind::InvalidQuery, "factor_integer(0)");
    ZInt n = abs(n0);
    std::map<ZInt, int> out;
    for (unsigned long p = 2; p <= 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (n < ZInt(p) * p) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[ZInt(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) split(n, out);
    return {out.begin(), out.end()};
}

int valuation(const ZInt& n0, const ZInt& p) {
    if (n0 == 0) return 0;
    ZInt n = abs(n0);
    int v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

}  // namespace k3iso
