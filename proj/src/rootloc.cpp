#include "k3iso/rootloc.hpp"

#include <algorithm>

#include "k3iso/errors.hpp"
#include "k3iso/zfactor.hpp"

namespace k3iso {

const char* handle_kind_name(HandleKind k) {
    switch (k) {
    case HandleKind::XminusOne: return "xm1";
    case HandleKind::XplusOne: return "xp1";
    case HandleKind::Quad: return "quad";
    }
    return "?";
}

ZPoly squarefree_part(const ZPoly& f) {
    if (f.degree() < 1) return primitive_part(f);
    ZPoly g = gcd_z(f, derivative(f));
    return primitive_part(exact_divide(primitive_part(f), g));
}

std::vector<ZPoly> sturm_sequence(const ZPoly& f0) {
    std::vector<ZPoly> seq;
    ZPoly a = squarefree_part(f0);
    seq.push_back(a);
    if (a.degree() < 1) return seq;
    ZPoly b = primitive_part(derivative(a));
    while (!b.is_zero()) {
        seq.push_back(b);
        ZPoly q, r;
        pseudo_divrem(a, b, q, r);
        if (r.is_zero()) break;
        // prem = lc(b)^k rem; the Sturm step needs -rem up to a positive factor
        const int k = a.degree() - b.degree() + 1;
        int sign = -1;
        if (b.lead() < 0 && (k & 1)) sign = 1;
        ZInt c = content(r);
        std::vector<ZInt> v = r.coeffs();
        for (auto& x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            if (sign < 0) x = -x;
        }
        a = b;
        b = ZPoly(std::move(v));
    }
    return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int var_at(const std::vector<ZPoly>& seq, const QNum& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    return variations(s);
}

// dir = +1 for +infinity, -1 for -infinity
int var_at_inf(const std::vector<ZPoly>& seq, int dir) {
    std::vector<int> s;
    for (const auto& p : seq) {
        int sg = sgn(p.lead());
        if (dir < 0 && (p.degree() & 1)) sg = -sg;
        s.push_back(sg);
    }
    return variations(s);
}

}  // namespace

int count_real_roots_in(const ZPoly& f, const QNum& a, const QNum& b) {
    if (f.degree() < 1) return 0;
    if (!(a < b)) return 0;
    auto seq = sturm_sequence(f);
    return var_at(seq, a) - var_at(seq, b);
}

int count_real_roots_above(const ZPoly& f, const QNum& a) {
    if (f.degree() < 1) return 0;
    auto seq = sturm_sequence(f);
    return var_at(seq, a) - var_at_inf(seq, 1);
}

int count_real_roots_below(const ZPoly& f, const QNum& b) {
    if (f.degree() < 1) return 0;
    auto seq = sturm_sequence(f);
    int n = var_at_inf(seq, -1) - var_at(seq, b);  // (-inf, b]
    if (f.sign_at(b) == 0) --n;
    return n;
}

int count_real_roots(const ZPoly& f) {
    if (f.degree() < 1) return 0;
    auto seq = sturm_sequence(f);
    return var_at_inf(seq, -1) - var_at_inf(seq, 1);
}

namespace {

const ZPoly& xm1() {
    static const ZPoly p{-1, 1};
    return p;
}
const ZPoly& xp1() {
    static const ZPoly p{1, 1};
    return p;
}

// Roots of T in the open interval (-2, 2).
int trace_roots_inside(const ZPoly& t) {
    int n = count_real_roots_in(t, QNum(-2), QNum(2));
    if (t.sign_at(QNum(2)) == 0) --n;
    return n;
}

}  // namespace

int count_unit_circle_roots(const ZPoly& f) {
    if (f.degree() < 1) return 0;
    if (!is_symmetric(f)) throw Error(ErrorKind::NotSymmetric, f.str() + " is not symmetric");
    int total = 0;
    for (const auto& [g, n] : factor_over_z(f).factors) {
        if (g == xm1() || g == xp1()) {
            total += n;
        } else if (is_palindromic(g) && g.degree() % 2 == 0) {
            total += 2 * n * trace_roots_inside(trace_poly(g));
        }
    }
    return total;
}

int m_of(const ZPoly& F) {
    if (!F.is_monic()) throw Error(ErrorKind::InvalidQuery, "m_of needs a monic polynomial");
    if (F.constant_term() == 0) throw Error(ErrorKind::ZeroConstantTerm, "m_of needs F(0) != 0");
    auto fac = factor_over_z(F).factors;
    int m2 = 0;  // twice m
    for (const auto& [g, n] : fac) {
        if (g == xm1() || g == xp1()) continue;
        if (is_palindromic(g) && g.degree() % 2 == 0) {
            int circle = 2 * trace_roots_inside(trace_poly(g));
            m2 += n * (g.degree() - circle);
            continue;
        }
        // non-symmetric factor: must be paired with its star at the same exponent
        ZPoly gs = primitive_part(star(g));
        bool paired = false;
        for (const auto& [h, k] : fac)
            if (h == gs && k == n) paired = true;
        if (!paired) throw Error(ErrorKind::NotSymmetric, "factor " + g.str() + " has no reciprocal partner");
        m2 += n * g.degree();
    }
    return m2 / 2;
}

bool is_salem(const ZPoly& f) {
    if (!f.is_monic() || f.degree() < 4 || (f.degree() & 1)) return false;
    if (!is_palindromic(f)) return false;
    ZPoly t = trace_poly(f);
    const int k = f.degree() / 2;
    if (count_real_roots_above(t, QNum(2)) != 1) return false;
    if (count_real_roots_below(t, QNum(-2)) != 0) return false;
    if (trace_roots_inside(t) != k - 1) return false;
    return is_irreducible_z(f);
}

namespace {

// splitting point strictly inside (lo, hi) that is not a root of t
QNum split_point(const ZPoly& t, const QNum& lo, const QNum& hi) {
    QNum w = hi - lo;
    for (int k = 2;; ++k) {
        // (lo+hi)/2, then lo + w/3, lo + w/4, ...
        QNum mid = (k == 2) ? QNum((lo + hi) / 2) : QNum(lo + w / k);
        if (t.sign_at(mid) != 0) return mid;
    }
}

void isolate(const ZPoly& t, const std::vector<ZPoly>& seq, const QNum& lo, const QNum& hi,
             std::vector<QInterval>& out) {
    // invariant: t(lo) != 0 and t(hi) != 0, so the count of (lo, hi] is the count of (lo, hi)
    int n = var_at(seq, lo) - var_at(seq, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    QNum mid = split_point(t, lo, hi);
    isolate(t, seq, mid, hi, out);
    isolate(t, seq, lo, mid, out);
}

}  // namespace

std::vector<RealQuadHandle> quad_handles(const ZPoly& f) {
    std::vector<RealQuadHandle> out;
    if (f == xm1()) {
        out.push_back({f, HandleKind::XminusOne, QNum(2), QNum(2), 1});
        return out;
    }
    if (f == xp1()) {
        out.push_back({f, HandleKind::XplusOne, QNum(-2), QNum(-2), 1});
        return out;
    }
    ZPoly t = trace_poly(f);
    if (t.sign_at(QNum(2)) == 0 || t.sign_at(QNum(-2)) == 0)
        throw Error(ErrorKind::InvalidQuery, f.str() + " has a root at 1 or -1");
    auto seq = sturm_sequence(t);
    std::vector<QInterval> iv;
    isolate(t, seq, QNum(-2), QNum(2), iv);  // pushed with c descending
    int ord = 1;
    for (const auto& i : iv) out.push_back({f, HandleKind::Quad, i.lo, i.hi, ord++});
    return out;
}

RealQuadHandle refine_handle(const RealQuadHandle& h, const QNum& width) {
    if (h.kind != HandleKind::Quad) return h;
    ZPoly t = trace_poly(h.parent);
    RealQuadHandle r = h;
    int slo = t.sign_at(r.lo);
    while (r.hi - r.lo > width) {
        QNum mid = (r.lo + r.hi) / 2;
        int sm = t.sign_at(mid);
        if (sm == 0) {
            // rational root: shrink around it without landing on it
            QNum q = (r.hi - r.lo) / 4;
            r.lo = mid - q / 2;
            r.hi = mid + q / 2;
            slo = t.sign_at(r.lo);
            continue;
        }
        if (sm == slo) r.lo = mid;
        else r.hi = mid;
    }
    return r;
}

QInterval real_root_approx(const ZPoly& f, const QNum& lo0, const QNum& hi0, const QNum& width) {
    ZPoly g = squarefree_part(f);
    auto seq = sturm_sequence(g);
    auto open_count = [&](const QNum& a, const QNum& b) {
        int n = var_at(seq, a) - var_at(seq, b);
        if (g.sign_at(b) == 0) --n;
        return n;
    };
    if (!(lo0 < hi0) || open_count(lo0, hi0) != 1)
        throw Error(ErrorKind::NotIsolated, "interval does not isolate exactly one root of " + f.str());
    QNum lo = lo0, hi = hi0;
    while (hi - lo > width) {
        QNum mid = (lo + hi) / 2;
        if (g.sign_at(mid) == 0) return {mid, mid};
        if (open_count(lo, mid) == 1) hi = mid;
        else lo = mid;
    }
    return {lo, hi};
}

std::string decimal_string(const QNum& q, int digits) {
    ZInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    ZInt num = q.get_num() * scale;
    ZInt v;
    mpz_tdiv_q(v.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s = v.get_str();
    if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return (neg ? "-" : "") + out;
}

}  // namespace k3iso
