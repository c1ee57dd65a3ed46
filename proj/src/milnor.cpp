#include "k3iso/milnor.hpp"

#include <algorithm>
#include <set>

#include "k3iso/errors.hpp"
#include "k3iso/zfactor.hpp"

namespace k3iso {

bool operator<(const HandleKey& a, const HandleKey& b) {
    if (a.parent != b.parent) return canonical_less(a.parent, b.parent);
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.ordinal < b.ordinal;
}

HandleKey key_of(const RealQuadHandle& h) { return {h.parent, h.kind, h.ordinal}; }

std::vector<IrrEntry> irr_real(const ZPoly& F) {
    if (!is_symmetric(F)) throw Error(ErrorKind::NotSymmetric, F.str() + " is not symmetric");
    const ZPoly xm1{-1, 1}, xp1{1, 1};
    std::vector<IrrEntry> out;
    auto fac = factor_over_z(F).factors;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        const auto& [g, n] = fac[i];
        const int idx = static_cast<int>(i) + 1;
        if (g == xm1 || g == xp1) {
            for (auto& h : quad_handles(g)) out.push_back({h, idx, n, n});
        } else if (is_palindromic(g) && g.degree() % 2 == 0) {
            for (auto& h : quad_handles(g)) out.push_back({h, idx, n, 2 * n});
        }
    }
    return out;
}

int MilnorIndex::sum() const {
    int s = 0;
    for (const auto& [k, v] : values) s += v;
    return s;
}

int MilnorIndex::at(const HandleKey& k) const {
    auto it = values.find(k);
    if (it == values.end()) throw Error(ErrorKind::InvalidMilnorIndex, "no value for handle of " + k.parent.str());
    return it->second;
}

MilnorIndex restrict_to(const MilnorIndex& tau, const std::vector<IrrEntry>& handles) {
    MilnorIndex r;
    for (const auto& e : handles) {
        HandleKey k = key_of(e.handle);
        auto it = tau.values.find(k);
        if (it != tau.values.end()) r.values[k] = it->second;
    }
    return r;
}

namespace {

bool value_ok(const IrrEntry& e, int v) {
    if (v < -e.weight || v > e.weight) return false;
    if (e.handle.kind == HandleKind::Quad) return ((v - 2 * e.exponent) % 4 + 4) % 4 == 0;
    return ((v - e.weight) % 2 + 2) % 2 == 0;
}

}  // namespace

bool mil_member(const MilnorIndex& tau, const ZPoly& F, int r, int s, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (r < 0 || s < 0 || r + s != F.degree()) return fail("signature does not match the degree");
    auto hs = irr_real(F);
    std::set<HandleKey> known;
    int total = 0;
    for (const auto& e : hs) {
        HandleKey k = key_of(e.handle);
        known.insert(k);
        auto it = tau.values.find(k);
        if (it == tau.values.end()) return fail("missing value at " + handle_label(e));
        if (!value_ok(e, it->second))
            return fail("value " + std::to_string(it->second) + " not admissible at " + handle_label(e));
        total += it->second;
    }
    for (const auto& [k, v] : tau.values)
        if (!known.count(k)) return fail("value given for a handle not in Irr_R(F): " + k.parent.str());
    if (total != r - s)
        return fail("sum " + std::to_string(total) + " differs from r - s = " + std::to_string(r - s));
    return true;
}

void require_mil(const MilnorIndex& tau, const ZPoly& F, int r, int s) {
    std::string why;
    if (!mil_member(tau, F, r, s, &why)) throw Error(ErrorKind::InvalidMilnorIndex, why);
}

MilnorIndex tau_flip(const ZPoly& F, const HandleKey& chosen) {
    MilnorIndex t;
    bool seen = false;
    for (const auto& e : irr_real(F)) {
        HandleKey k = key_of(e.handle);
        if (k == chosen) {
            t.values[k] = e.weight;
            seen = true;
        } else {
            t.values[k] = -e.weight;
        }
    }
    if (!seen) throw Error(ErrorKind::InvalidQuery, "handle is not an element of Irr_R(F)");
    return t;
}

MilnorIndex make_tau_delta(const ZPoly& S, const ZPoly& F, int ordinal) {
    ZPoly q;
    if (!try_divide(F, S, q)) throw Error(ErrorKind::InvalidQuery, "S does not divide F");
    return tau_flip(F, {S, HandleKind::Quad, ordinal});
}

MilnorIndex make_tau_zeta(const ZPoly& F, const HandleKey& handle) {
    if (handle.kind != HandleKind::Quad || !cyclotomic_index(handle.parent))
        throw Error(ErrorKind::InvalidQuery, "tau_zeta needs a quadratic handle of a cyclotomic factor");
    return tau_flip(F, handle);
}

MilnorIndex make_tau_one(const ZPoly& S, const ZPoly& F) {
    const int d = S.degree();
    const ZPoly xm1{-1, 1};
    if (d > 22 || F != S * pow(xm1, 22 - d))
        throw Error(ErrorKind::InvalidQuery, "tau_one needs F = S (X-1)^(22-d)");
    MilnorIndex t;
    int sum = 0;
    for (const auto& e : irr_real(F)) {
        if (e.handle.kind != HandleKind::Quad) continue;
        t.values[key_of(e.handle)] = -2;
        sum -= 2;
    }
    // total must be 3 - 19 = -16; with d - 2 quads at -2 this leaves d - 18 for X - 1
    if (d < 22) t.values[{xm1, HandleKind::XminusOne, 1}] = -16 - sum;
    require_mil(t, F, 3, 19);
    return t;
}

MilnorIndex make_tau_definite(const ZPoly& F, int r, int s) {
    if (r != 0 && s != 0) throw Error(ErrorKind::InvalidQuery, "definite index needs r = 0 or s = 0");
    MilnorIndex t;
    for (const auto& e : irr_real(F)) t.values[key_of(e.handle)] = s == 0 ? e.weight : -e.weight;
    require_mil(t, F, r, s);
    return t;
}

std::optional<MilnorIndex> some_tau(const ZPoly& F, int r, int s) {
    if (r < 0 || s < 0 || r + s != F.degree()) return std::nullopt;
    auto hs = irr_real(F);
    const int target = r - s;
    const int n = static_cast<int>(hs.size());
    // reach[i] = sums achievable by handles i..n-1
    std::vector<std::set<int>> reach(n + 1);
    reach[n].insert(0);
    for (int i = n - 1; i >= 0; --i) {
        for (int v = -hs[i].weight; v <= hs[i].weight; ++v) {
            if (!value_ok(hs[i], v)) continue;
            for (int x : reach[i + 1]) reach[i].insert(x + v);
        }
    }
    if (!reach[0].count(target)) return std::nullopt;
    MilnorIndex t;
    int need = target;
    for (int i = 0; i < n; ++i) {
        for (int v = hs[i].weight; v >= -hs[i].weight; --v) {
            if (!value_ok(hs[i], v)) continue;
            if (reach[i + 1].count(need - v)) {
                t.values[key_of(hs[i].handle)] = v;
                need -= v;
                break;
            }
        }
    }
    return t;
}

std::string handle_label(const IrrEntry& e) {
    switch (e.handle.kind) {
    case HandleKind::XminusOne: return "xm1";
    case HandleKind::XplusOne: return "xp1";
    case HandleKind::Quad: break;
    }
    return "f" + std::to_string(e.factor_index) + ".q" + std::to_string(e.handle.ordinal);
}

}  // namespace k3iso
