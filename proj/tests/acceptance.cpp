// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3iso/certificate_check.hpp"
#include "k3iso/decide.hpp"
#include "k3iso/errors.hpp"
#include "k3iso/fpfactor.hpp"
#include "k3iso/milnor.hpp"
#include "k3iso/obstruction.hpp"
#include "k3iso/polyparse.hpp"
#include "k3iso/rootloc.hpp"
#include "k3iso/salem.hpp"
#include "k3iso/salem_table.hpp"
#include "k3iso/zfactor.hpp"
#include "oracles.hpp"

using namespace k3iso;

namespace {

struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

oracle::Coeffs to_oracle(const ZPoly& f) { return f.coeffs(); }
ZPoly from_oracle(const oracle::Coeffs& c) { return ZPoly(c); }

bool replays(const DecisionCertificate& c) { return replay_certificate(certificate_json(c)).ok; }

const std::vector<SalemTableEntry>& table() {
    static const auto t = load_salem_table(default_table_path());
    return t;
}

ZPoly xm1() { return ZPoly{-1, 1}; }

// ---------------------------------------------------------------------------

void crit1(Check& c) {
    const ZPoly F = parse_poly("(x^4-x^2+1)(x-1)^4");
    c.expect(F == ZPoly{1, -4, 5, 0, -4, 0, 5, -4, 1}, "expansion");
    auto no = decide_exists(F, 8, 0, std::nullopt);
    c.expect(no.verdict == Verdict::No, std::string("(8,0) gave ") + verdict_name(no.verdict));
    c.expect(replays(no), "(8,0) certificate does not replay");
    auto yes = decide_exists(F, 4, 4, std::nullopt);
    c.expect(yes.verdict == Verdict::Yes, std::string("(4,4) gave ") + verdict_name(yes.verdict));
    c.expect(replays(yes), "(4,4) certificate does not replay");
}

void crit2(Check& c) {
    const ZPoly F = parse_poly("(x^4-x^2+1)(x-1)^4");
    ShaGroup g = sha_group(F);
    c.expect(g.rank == 1, "rank " + std::to_string(g.rank));
    auto classes = sha_nontrivial_classes(g);
    c.expect(classes.size() == 1, "class count " + std::to_string(classes.size()));
    if (classes.size() == 1 && g.vertices.size() == 2) {
        int ia = -1, ib = -1;
        for (int i = 0; i < 2; ++i) {
            if (g.vertices[i] == xm1()) ia = i;
            if (g.vertices[i] == (ZPoly{1, 0, -1, 0, 1})) ib = i;
        }
        c.expect(ia >= 0 && ib >= 0, "vertices");
        if (ia >= 0 && ib >= 0) c.expect(classes[0][ia] != classes[0][ib], "class does not separate the vertices");
    } else {
        c.expect(false, "vertex count " + std::to_string(g.vertices.size()));
    }
}

void crit3(Check& c) {
    auto d = decide_exists(cyclotomic(7) * pow(xm1(), 2), 8, 0, std::nullopt);
    c.expect(d.verdict == Verdict::Yes && replays(d), "Phi7 (X-1)^2 at (8,0)");
    int cases = 0;
    for (unsigned p : {3u, 5u, 7u, 11u, 13u})
        for (int m = 2; m <= 24; m += 2) {
            if ((static_cast<int>(p) - 1 + m) % 8 != 0) continue;
            const int n = static_cast<int>(p) - 1 + m;
            auto r = decide_exists(cyclotomic(p) * pow(xm1(), m), n, 0, std::nullopt);
            ++cases;
            c.expect(r.verdict == Verdict::Yes, "p=" + std::to_string(p) + " m=" + std::to_string(m));
        }
    c.expect(cases >= 10, "too few cases");
}

void crit4(Check& c) {
    const ZPoly S = parse_poly("x^18-x^12-x^11-x^10-x^9-x^8-x^7-x^6+1");
    auto info = SalemInfo::from(S);
    c.expect(info.s1 == -5, "S(1) = " + info.s1.get_str());
    c.expect(info.sm1 == 1, "S(-1) = " + info.sm1.get_str());
    auto v = complemented_realizable(info);
    c.expect(v.status == Realizability::Realizable, std::string("status ") + realizability_name(v.status));
    for (auto& w : v.witnesses)
        if (w.certificate) c.expect(w.certificate->verdict == Verdict::Yes && replays(*w.certificate), "witness");
}

void crit5(Check& c) {
    const auto& e = find_entry(table(), "lambda_18");
    auto rep = validate_table({e});
    c.expect(rep.ok(), "table entry checks failed");
    for (unsigned m : {1u, 2u, 3u, 4u, 6u}) c.expect(abs(resultant(e.S, cyclotomic(m))) == 1, "Res Phi" + std::to_string(m));
    c.expect(abs(resultant(e.S, cyclotomic(12))) == 169, "Res Phi12");
    auto d = degree18_workflow(SalemInfo::from(e.S));
    c.expect(d.overall == Realizability::NotRealizable, std::string("overall ") + realizability_name(d.overall));
    bool saw13 = false;
    for (auto& [p, cf] : d.phi12_common) {
        if (p != 13) continue;
        saw13 = true;
        for (auto& f : cf) {
            c.expect(!f.symmetric, "symmetric factor " + f.factor.str());
        }
        const FpPoly a(13, {6, 1}), b(13, {11, 1});
        bool ha = false, hb = false;
        for (auto& f : cf) {
            ha |= f.factor == a;
            hb |= f.factor == b;
        }
        c.expect(ha && hb && cf.size() == 2, "common factors mod 13");
        c.expect(common_symmetric_irreducible_factors(e.S, cyclotomic(12), 13).empty(), "symmetric witness at 13");
    }
    c.expect(saw13, "no entry for p = 13");
}

void crit6(Check& c) {
    const ZPoly S = find_entry(table(), "lambda_18").S;
    const ZPoly phi12 = cyclotomic(12);
    const ZPoly F = S * phi12;
    auto z = decide_exists(F, 3, 19, make_tau_zeta(F, {phi12, HandleKind::Quad, 1}));
    c.expect(z.verdict == Verdict::Yes && replays(z), std::string("tau_zeta ") + verdict_name(z.verdict));
    const int nq = static_cast<int>(quad_handles(S).size());
    for (int i = 1; i <= nq; ++i) {
        auto d = decide_exists(F, 3, 19, make_tau_delta(S, F, i));
        const std::string tag = "tau_delta q" + std::to_string(i);
        c.expect(d.verdict == Verdict::No && d.rule == Rule::ArchimedeanDelta, tag + " " + rule_name(d.rule));
        bool delta1 = false;
        for (auto& cl : d.data.value("classes", nlohmann::json::array()))
            if (cl["delta"] == 1) delta1 = true;
        c.expect(delta1, tag + " no class with delta 1");
        c.expect(replays(d), tag + " replay");
    }
}

void crit7(Check& c) {
    int n = 0;
    for (auto& e : table()) {
        const ZPoly P = graeffe_square(e.S);
        const ZInt s1 = e.S.eval(ZInt(1)), sm1 = e.S.eval(ZInt(-1));
        c.expect(P.eval(ZInt(1)) == s1 * sm1, e.name + " P(1)");
        c.expect(is_perfect_square(abs(P.eval(ZInt(-1)))), e.name + " |P(-1)|");
        if (e.S.degree() % 4 == 0) c.expect(abs(s1 * sm1) > 1, e.name + " ramified");
        ++n;
    }
    c.expect(n >= 20, "only " + std::to_string(n) + " entries");
}

void crit8(Check& c) {
    int n = 0;
    for (auto& e : table()) {
        const int d = e.S.degree();
        if (d != 4 && d != 6 && d != 8 && d != 12 && d != 14 && d != 16) continue;
        ++n;
        auto v = salem_realizable(SalemInfo::from(e.S));
        c.expect(v.status == Realizability::Realizable, e.name);
    }
    c.expect(n > 0, "no entries");
}

void crit9(Check& c) {
    const ZPoly S = parse_poly("x^18 - x^17 - x^10 + x^9 - x^8 - x + 1");
    c.expect(S == find_entry(table(), "lambda_18_2").S, "table entry differs");
    c.expect(abs(resultant(S, cyclotomic(3))) == 25, "Res Phi3");
    auto scan = power_scan(SalemInfo::from(S), 1, 6);
    bool k6 = false;
    for (auto& e : scan)
        if (e.k == 6 && e.certified) {
            k6 = true;
            if (e.witness)
                for (auto& w : e.witness->witnesses)
                    if (w.certificate) c.expect(replays(*w.certificate), "k = 6 witness replay");
        }
    c.expect(k6, "k = 6 not certified");
}

// ---- 10: oracle suites ----

std::vector<ZPoly> random_irreducible_pieces(std::mt19937_64& rng, int count) {
    std::vector<ZPoly> out;
    std::uniform_int_distribution<int> dd(1, 4);
    for (int i = 0; i < count; ++i) out.push_back(from_oracle(oracle::random_poly(rng, dd(rng), 5, false)));
    return out;
}

void crit10a(Check& c) {
    std::mt19937_64 rng(20261);
    std::uniform_int_distribution<int> nf(1, 4), ex(1, 3);
    for (int t = 0; t < 500; ++t) {
        ZPoly prod = ZPoly{1};
        oracle::Coeffs ref{1};
        for (auto& p : random_irreducible_pieces(rng, nf(rng))) {
            const int e = ex(rng);
            for (int k = 0; k < e; ++k) {
                prod = prod * p;
                ref = oracle::schoolbook_mul(ref, to_oracle(p));
            }
        }
        if (prod != from_oracle(ref)) {
            c.expect(false, "multiply disagrees with schoolbook at case " + std::to_string(t));
            return;
        }
        auto fd = factor_over_z(prod);
        bool good = fd.reconstruct() == prod;
        for (auto& [f, n] : fd.factors) {
            good = good && content(f) == 1 && f.lead() > 0 && n >= 1;
            auto again = factor_over_z(f);
            good = good && again.factors.size() == 1 && again.factors[0].second == 1;
        }
        if (!good) {
            c.expect(false, "case " + std::to_string(t) + ": " + prod.str());
            return;
        }
    }
}

void crit10b(Check& c) {
    std::mt19937_64 rng(20262);
    std::vector<u64> primes;
    for (u64 p = 2; p < 100; ++p)
        if (is_prime_u64(p)) primes.push_back(p);
    std::uniform_int_distribution<std::size_t> pi(0, primes.size() - 1);
    std::uniform_int_distribution<int> dd(1, 12);
    for (int t = 0; t < 1000; ++t) {
        const u64 p = primes[pi(rng)];
        std::uniform_int_distribution<u64> cd(0, p - 1);
        const int d = dd(rng);
        oracle::Fp f(d + 1);
        for (auto& x : f) x = cd(rng);
        f[d] = 1;
        auto fac = factor_mod_p(FpPoly(p, f));
        oracle::Fp prod{1};
        bool good = true;
        for (auto& [h, e] : fac) {
            good = good && h.is_monic();
            const double cost = std::pow(static_cast<double>(p), h.degree() / 2);
            if (cost <= 2e4) good = good && oracle::irreducible_by_trial(h.coeffs(), p);
            for (int k = 0; k < e; ++k) prod = oracle::fp_mul(prod, h.coeffs(), p);
        }
        good = good && prod == f;
        if (!good) {
            c.expect(false, "case " + std::to_string(t) + " p=" + std::to_string(p));
            return;
        }
    }
}

oracle::Coeffs random_symmetric(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> cd(-4, 4);
    oracle::Coeffs c(deg + 1);
    for (int i = 0; i <= deg / 2; ++i) c[i] = c[deg - i] = cd(rng);
    c[0] = c[deg] = 1;
    return c;
}

void crit10c(Check& c) {
    std::mt19937_64 rng(20263);
    std::uniform_int_distribution<int> dd(1, 3);
    std::vector<u64> primes;
    for (u64 p = 2; p <= 50; ++p)
        if (is_prime_u64(p)) primes.push_back(p);
    int compared = 0, nonempty = 0;
    for (int t = 0; t < 40; ++t) {
        const oracle::Coeffs f = random_symmetric(rng, 2 * dd(rng));
        const oracle::Coeffs g = random_symmetric(rng, 2 * dd(rng));
        if (f == g || oracle::sylvester_resultant(f, g) == 0) continue;
        const ZPoly F = from_oracle(f), G = from_oracle(g);
        std::vector<ZInt> lib_primes;
        for (auto& w : pi_set(F, G))
            if (w.p <= 50) lib_primes.push_back(w.p);
        std::vector<ZInt> brute_primes;
        for (u64 p : primes) {
            const int maxdeg = static_cast<int>(std::min(f.size(), g.size())) - 1;
            auto brute = oracle::brute_common_symmetric(f, g, p, maxdeg);
            auto lib = common_symmetric_irreducible_factors(F, G, p);
            std::vector<oracle::Fp> libc;
            for (auto& h : lib) libc.push_back(h.coeffs());
            std::sort(libc.begin(), libc.end());
            std::sort(brute.begin(), brute.end());
            ++compared;
            if (libc != brute) {
                c.expect(false, "factor set differs: " + F.str() + " / " + G.str() + " p=" + std::to_string(p));
                return;
            }
            if (!brute.empty()) {
                brute_primes.emplace_back(static_cast<unsigned long>(p));
                ++nonempty;
            }
        }
        if (lib_primes != brute_primes) {
            c.expect(false, "Pi set differs: " + F.str() + " / " + G.str());
            return;
        }
    }
    c.expect(compared > 300 && nonempty > 10, "too few comparisons");
}

void crit10d(Check& c) {
    std::mt19937_64 rng(20264);
    std::uniform_int_distribution<int> dd(1, 10);
    int done = 0;
    while (done < 300) {
        const oracle::Coeffs f = oracle::random_poly(rng, dd(rng), 9, false);
        oracle::Coeffs df;
        for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));
        if (f.size() > 2 && oracle::sylvester_resultant(f, df) == 0) continue;
        ++done;
        const int a = count_real_roots(from_oracle(f)), b = oracle::real_roots_squarefree(f);
        if (a != b) {
            c.expect(false, from_oracle(f).str() + ": sturm " + std::to_string(a) + " descartes " + std::to_string(b));
            return;
        }
    }
}

void crit10e(Check& c) {
    std::vector<ZPoly> polys;
    for (auto& e : table()) polys.push_back(e.S);
    for (unsigned m = 1; m <= 40; ++m) polys.push_back(cyclotomic(m));
    polys.push_back(parse_poly("(x^4-x^2+1)(x-1)^4"));
    polys.push_back(find_entry(table(), "lambda_18").S * cyclotomic(12));
    polys.push_back(parse_poly("(x^2-3x+1)(x^2+x+1)^2(x+1)^3"));
    polys.push_back(parse_poly("(x^2-x-1)(x^2+x-1)"));
    std::mt19937_64 rng(20265);
    std::uniform_int_distribution<int> dd(1, 6);
    for (int t = 0; t < 200; ++t) polys.push_back(from_oracle(random_symmetric(rng, 2 * dd(rng))));
    int n = 0;
    for (auto& F : polys) {
        const int m = m_of(F), on = count_unit_circle_roots(F);
        ++n;
        c.expect(2 * m + on == F.degree(), F.str());
        if (!c.ok) return;
    }
    c.expect(n >= 250, "too few polynomials");
}

void crit10(Check& c) {
    Check a, b, cc, d, e;
    crit10a(a);
    crit10b(b);
    crit10c(cc);
    crit10d(d);
    crit10e(e);
    c.expect(a.ok, "(a) " + a.why.str());
    c.expect(b.ok, "(b) " + b.why.str());
    c.expect(cc.ok, "(c) " + cc.why.str());
    c.expect(d.ok, "(d) " + d.why.str());
    c.expect(e.ok, "(e) " + e.why.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"Phi12 (X-1)^4: NO at (8,0), YES at (4,4)", crit1},
        {"Phi12 (X-1)^4: obstruction rank 1, separating class", crit2},
        {"Phi_p (X-1)^m positive definite family", crit3},
        {"complemented degree-18 Salem with S(1) = -5", crit4},
        {"lambda_18 workflow NOT_REALIZABLE, mod-13 witness", crit5},
        {"S Phi12 at (3,19): tau_zeta YES, tau_delta NO", crit6},
        {"Graeffe square identities on the table", crit7},
        {"degrees 4..16 (not 10) realizable", crit8},
        {"lambda_18_2 Res Phi3 = 25 and k = 6 certified", crit9},
        {"oracle property suites", crit10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %zu: %s (%.0f ms)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms,
                    c.ok ? "" : " -- ", c.ok ? "" : c.why.str().c_str());
        if (!c.ok) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
