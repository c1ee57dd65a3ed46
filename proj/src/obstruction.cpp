#include "k3iso/obstruction.hpp"

#include <algorithm>
#include <numeric>

#include "k3iso/errors.hpp"
#include "k3iso/intfactor.hpp"
#include "k3iso/zfactor.hpp"

namespace k3iso {

namespace {

const ZPoly kXm1{-1, 1};
const ZPoly kXp1{1, 1};

}  // namespace

ZPoly TypedFactors::reassemble() const {
    ZPoly r = pow(kXm1, n_xm1) * pow(kXp1, n_xp1);
    for (const auto& [f, n] : i1) r *= pow(f, n);
    for (const auto& p : type2) r *= pow(p.g * p.gstar, p.n);
    return r;
}

TypedFactors classify_factors(const ZPoly& F) {
    if (!F.is_monic()) throw Error(ErrorKind::InvalidQuery, F.str() + " is not monic");
    if (F.constant_term() == 0) throw Error(ErrorKind::ZeroConstantTerm, F.str() + " vanishes at 0");
    if (!is_symmetric(F)) throw Error(ErrorKind::NotSymmetric, F.str() + " is not symmetric");
    TypedFactors t;
    auto fac = factor_over_z(F).factors;
    std::vector<bool> used(fac.size(), false);
    for (std::size_t i = 0; i < fac.size(); ++i) {
        const auto& [g, n] = fac[i];
        if (g == kXm1) {
            t.n_xm1 = n;
            used[i] = true;
        } else if (g == kXp1) {
            t.n_xp1 = n;
            used[i] = true;
        } else if (is_palindromic(g) && g.degree() % 2 == 0) {
            t.i1.emplace_back(g, n);
            used[i] = true;
        }
    }
    for (std::size_t i = 0; i < fac.size(); ++i) {
        if (used[i]) continue;
        const auto& [g, n] = fac[i];
        ZPoly gs = star(g);
        bool found = false;
        for (std::size_t j = i + 1; j < fac.size(); ++j) {
            if (!used[j] && fac[j].first == gs && fac[j].second == n) {
                used[i] = used[j] = true;
                t.type2.push_back({g, gs, n});
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorKind::NotSymmetric, "factor " + g.str() + " has no reciprocal partner");
    }
    return t;
}

std::vector<PiWitness> pi_set(const ZPoly& f, const ZPoly& g) {
    if (f == g) throw Error(ErrorKind::SamePolynomial, "pi_set needs two distinct polynomials");
    ZInt res = resultant(f, g);
    if (res == 0) throw Error(ErrorKind::InvalidQuery, f.str() + " and " + g.str() + " share a factor");
    std::vector<PiWitness> out;
    for (const auto& [p, e] : factor_integer(res)) {
        (void)e;
        if (!p.fits_ulong_p())
            throw Error(ErrorKind::FactorizationIncomplete, "prime " + p.get_str() + " exceeds the word-size field");
        auto w = common_symmetric_irreducible_factors(f, g, p.get_ui());
        if (!w.empty()) out.push_back({p, std::move(w)});
    }
    return out;
}

ShaGroup sha_group(const ZPoly& F) {
    TypedFactors t = classify_factors(F);
    ShaGroup sha;
    if (t.n_xm1 > 0) {
        sha.vertices.push_back(kXm1);
        sha.exponents.push_back(t.n_xm1);
    }
    if (t.n_xp1 > 0) {
        sha.vertices.push_back(kXp1);
        sha.exponents.push_back(t.n_xp1);
    }
    for (const auto& [f, n] : t.i1) {
        sha.vertices.push_back(f);
        sha.exponents.push_back(n);
    }
    const int nv = static_cast<int>(sha.vertices.size());
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            auto pi = pi_set(sha.vertices[a], sha.vertices[b]);
            if (pi.empty()) continue;
            sha.edges.push_back({a, b, std::move(pi)});
            int ra = find(a), rb = find(b);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::vector<int> comp_of(nv, -1);
    for (int v = 0; v < nv; ++v) {
        int r = find(v);
        if (comp_of[r] < 0) {
            comp_of[r] = static_cast<int>(sha.components.size());
            sha.components.emplace_back();
        }
        sha.components[comp_of[r]].push_back(v);
    }
    sha.rank = sha.components.empty() ? 0 : static_cast<int>(sha.components.size()) - 1;
    return sha;
}

std::vector<std::vector<int>> sha_nontrivial_classes(const ShaGroup& sha) {
    std::vector<std::vector<int>> out;
    const int c = static_cast<int>(sha.components.size());
    if (c <= 1) return out;
    const std::size_t nv = sha.vertices.size();
    // subsets of components 1..c-1, nonempty
    for (unsigned long mask = 1; mask < (1ul << (c - 1)); ++mask) {
        std::vector<int> cls(nv, 0);
        for (int k = 1; k < c; ++k) {
            if (!(mask & (1ul << (k - 1)))) continue;
            for (int v : sha.components[k]) cls[v] = 1;
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<std::vector<int>> sha_nontrivial_classes(const ZPoly& F) {
    return sha_nontrivial_classes(sha_group(F));
}

}  // namespace k3iso
