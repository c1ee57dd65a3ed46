#include "k3iso/certificate_check.hpp"

#include <map>
#include <set>

#include "k3iso/decide.hpp"
#include "k3iso/errors.hpp"
#include "k3iso/intfactor.hpp"
#include "k3iso/milnor.hpp"
#include "k3iso/obstruction.hpp"
#include "k3iso/rootloc.hpp"

namespace k3iso {

using nlohmann::json;

namespace {

bool square(const ZInt& z) { return z >= 0 && is_perfect_square(z); }

int mod8(int x) { return ((x % 8) + 8) % 8; }

struct Local {
    bool c1 = false;
    bool z2 = false;
    bool odd = true;
};

// Finite-place conditions recomputed from F(1), F(-1).
Local local_conditions(const ZPoly& F) {
    Local l;
    const ZInt a = F.eval(ZInt(1)), b = F.eval(ZInt(-1));
    ZInt t = a * b;
    if ((F.degree() / 2) % 2) t = -t;
    l.c1 = square(abs(a)) && square(abs(b)) && square(t);
    const ZInt two = 2;
    l.z2 = F.constant_term() == 1 && valuation(a, two) % 2 == 0 && valuation(b, two) % 2 == 0;
    if (l.z2 && t != 0) {
        const int v = valuation(t, two);
        ZInt u = t;
        mpz_fdiv_q_2exp(u.get_mpz_t(), u.get_mpz_t(), v);
        ZInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
        l.z2 = v % 2 == 0 && (r == 1 || r == 5);
    }
    std::set<ZInt> primes;
    for (const ZInt& v : {a, b})
        if (v != 0)
            for (const auto& pe : factor_integer(v)) primes.insert(pe.first);
    for (const auto& p : primes) {
        if (p == 2) {
            if (valuation(a * b, p) % 2) l.odd = false;
        } else if (valuation(a, p) % 2 || valuation(b, p) % 2) {
            l.odd = false;
        }
    }
    return l;
}

bool c2_holds(const ZPoly& F, int r, int s) {
    const int m = (F.degree() - count_unit_circle_roots(F)) / 2;
    if (r < m || s < m) return false;
    if (F.eval(ZInt(1)) * F.eval(ZInt(-1)) != 0) return m % 2 == r % 2 && r % 2 == s % 2;
    return true;
}

// Range, parity (quads: 2n mod 4), key set and total.
bool in_mil(const MilnorIndex& t, const ZPoly& F, int r, int s) {
    auto hs = irr_real(F);
    if (hs.size() != t.values.size()) return false;
    int total = 0;
    for (const auto& e : hs) {
        auto it = t.values.find(key_of(e.handle));
        if (it == t.values.end()) return false;
        const int v = it->second;
        if (v < -e.weight || v > e.weight) return false;
        if (e.handle.kind == HandleKind::Quad) {
            if (((v - 2 * e.exponent) % 4 + 4) % 4) return false;
        } else if (((v - e.weight) % 2 + 2) % 2) {
            return false;
        }
        total += v;
    }
    return total == r - s;
}

bool mil_nonempty(const ZPoly& F, int r, int s) {
    std::set<int> reach{0};
    for (const auto& e : irr_real(F)) {
        std::set<int> next;
        for (int v = -e.weight; v <= e.weight; ++v) {
            const bool ok = e.handle.kind == HandleKind::Quad ? ((v - 2 * e.exponent) % 4 + 4) % 4 == 0
                                                              : ((v - e.weight) % 2 + 2) % 2 == 0;
            if (ok)
                for (int x : reach) next.insert(x + v);
        }
        reach = std::move(next);
    }
    return reach.count(r - s) != 0;
}

int w2(int s) { return (s * (s - 1) / 2) & 1; }

class Replayer {
public:
    ReplayResult result;

    void node(const json& j, const std::string& path) {
        ++result.nodes;
        try {
            check(j, path);
        } catch (const std::exception& e) {
            fail(path, std::string("exception: ") + e.what());
        }
    }

private:
    void fail(const std::string& path, const std::string& msg) {
        result.ok = false;
        result.errors.push_back(path + ": " + msg);
    }

    void expect(bool cond, const std::string& path, const std::string& msg) {
        if (!cond) fail(path, msg);
    }

    void check(const json& j, const std::string& path) {
        const ZPoly F = poly_from_json(j.at("block"));
        const int r = j.at("signature").at(0).get<int>();
        const int s = j.at("signature").at(1).get<int>();
        const std::string verdict = j.at("verdict").get<std::string>();
        const std::string rule = j.at("rule").get<std::string>();
        std::optional<MilnorIndex> tau, wit;
        if (j.contains("tau")) tau = tau_from_json(j.at("tau"));
        if (j.contains("tau_witness")) wit = tau_from_json(j.at("tau_witness"));
        const json& data = j.at("data");
        const json& kids = j.at("children");
        expect(r >= 0 && s >= 0 && r + s == F.degree(), path, "signature does not sum to the degree");
        if (j.contains("poly")) expect(j.at("poly").get<std::string>() == F.str(), path, "poly text differs from block");
        if (data.contains("sha_rank"))
            expect(data.at("sha_rank").get<int>() == sha_group(F).rank, path, "stated obstruction rank is wrong");

        if (rule == "C1Fail") {
            expect(verdict == "NO", path, "C1Fail must be NO");
            Local l = local_conditions(F);
            expect(!(l.c1 && l.z2 && l.odd), path, "all finite-place conditions hold");
        } else if (rule == "C2Fail") {
            expect(verdict == "NO", path, "C2Fail must be NO");
            bool bad = !c2_holds(F, r, s);
            if (tau) bad = bad || !in_mil(*tau, F, r, s);
            else bad = bad || !mil_nonempty(F, r, s);
            expect(bad, path, "C2 and Milnor membership hold");
        } else if (rule == "ShaZeroHasse") {
            expect(verdict == "YES", path, "ShaZeroHasse must be YES");
            yes_leaf(F, r, s, path);
            expect(sha_group(F).rank == 0, path, "obstruction group is not trivial");
            expect(wit.has_value() && in_mil(*wit, F, r, s), path, "witness index not in Mil");
            if (tau) expect(wit && *wit == *tau, path, "witness differs from the prescribed index");
        } else if (rule == "PartitionSum") {
            expect(verdict == "YES", path, "PartitionSum must be YES");
            expect(kids.size() == 2, path, "partition needs two blocks");
            if (kids.size() != 2) return;
            const ZPoly G = poly_from_json(kids[0].at("block")), H = poly_from_json(kids[1].at("block"));
            expect(G * H == F, path, "blocks do not multiply to F");
            expect(gcd_z(G, H).degree() == 0, path, "blocks share a factor");
            int rs[2][2];
            for (int i = 0; i < 2; ++i) {
                rs[i][0] = kids[i].at("signature").at(0).get<int>();
                rs[i][1] = kids[i].at("signature").at(1).get<int>();
                expect(kids[i].at("verdict") == "YES", path, "a block is not YES");
                expect(mod8(rs[i][0] - rs[i][1]) == 0, path, "block signature not r = s (mod 8)");
            }
            expect(rs[0][0] + rs[1][0] == r && rs[0][1] + rs[1][1] == s, path, "block signatures do not add up");
            if (tau) {
                MilnorIndex u;
                for (int i = 0; i < 2; ++i) {
                    expect(kids[i].contains("tau"), path, "block lacks its index");
                    if (!kids[i].contains("tau")) continue;
                    MilnorIndex ti = tau_from_json(kids[i].at("tau"));
                    const ZPoly& B = i == 0 ? G : H;
                    expect(ti == restrict_to(*tau, irr_real(B)), path, "block index is not the restriction");
                    u.values.insert(ti.values.begin(), ti.values.end());
                }
                expect(u == *tau, path, "block indices do not cover the index");
            }
            if (wit) expect(in_mil(*wit, F, r, s), path, "witness index not in Mil");
            for (std::size_t i = 0; i < kids.size(); ++i) node(kids[i], path + "/" + std::to_string(i));
        } else if (rule == "ForcedSplitExhausted") {
            expect(verdict == "NO", path, "ForcedSplitExhausted must be NO");
            const ZPoly G = poly_from_json(data.at("G")), H = poly_from_json(data.at("H"));
            expect(G * H == F, path, "G H differs from F");
            const ZInt res = resultant(G, H);
            expect(res == 1 || res == -1, path, "|Res(G, H)| != 1");
            std::vector<std::pair<int, int>> splits;
            const int dg = G.degree(), dh = H.degree();
            auto ok8 = [](int rr, int d) { return mod8(2 * rr - d) == 0; };
            if (tau) {
                const int sg = restrict_to(*tau, irr_real(G)).sum();
                if ((dg + sg) % 2 == 0) {
                    const int rg = (dg + sg) / 2, rh = r - rg;
                    if (rg >= 0 && rg <= dg && rh >= 0 && rh <= dh && ok8(rg, dg) && ok8(rh, dh))
                        splits.emplace_back(rg, rh);
                }
            } else {
                for (int rg = 0; rg <= dg; ++rg) {
                    const int rh = r - rg;
                    if (rh >= 0 && rh <= dh && ok8(rg, dg) && ok8(rh, dh)) splits.emplace_back(rg, rh);
                }
            }
            const json& rec = data.at("splits");
            expect(rec.size() == splits.size(), path, "recorded splits differ from the valid splits");
            expect(kids.size() == splits.size(), path, "one failing block per split is required");
            for (std::size_t i = 0; i < splits.size() && i < rec.size() && i < kids.size(); ++i) {
                const auto [rg, rh] = splits[i];
                expect(rec[i].at("r_G").get<int>() == rg && rec[i].at("r_H").get<int>() == rh, path,
                       "split " + std::to_string(i) + " does not match");
                const bool onG = rec[i].at("failed") == "G";
                const ZPoly& B = onG ? G : H;
                const json& k = kids[i];
                expect(poly_from_json(k.at("block")) == B, path, "failing block mismatch");
                expect(k.at("signature").at(0).get<int>() == (onG ? rg : rh), path, "failing block signature");
                expect(k.at("verdict") == "NO", path, "failing block is not NO");
                node(k, path + "/" + std::to_string(i));
            }
        } else if (rule == "ArchimedeanDelta") {
            expect(tau.has_value(), path, "archimedean comparison needs an index");
            if (!tau) return;
            ShaGroup sha = sha_group(F);
            bool m = false, p = false;
            for (const auto& v : sha.vertices) {
                if (v == ZPoly{-1, 1}) m = true;
                if (v == ZPoly{1, 1}) p = true;
            }
            expect(!(m && p), path, "X-1 and X+1 both divide F");
            expect(sha.rank > 0, path, "rank 0 needs no comparison");
            yes_leaf(F, r, s, path);
            expect(in_mil(*tau, F, r, s), path, "index not in Mil");
            const MilnorIndex tau0 = tau_from_json(data.at("tau0"));
            expect(in_mil(tau0, F, r, s), path, "reference index not in Mil");
            expect(kids.size() == 1, path, "reference certificate missing");
            if (kids.size() == 1) {
                const json& k = kids[0];
                expect(poly_from_json(k.at("block")) == F && k.at("signature").at(0).get<int>() == r, path,
                       "reference certificate is for a different query");
                expect(k.at("verdict") == "YES" && !k.contains("tau"), path, "reference must be an unconstrained YES");
                expect(k.contains("tau_witness") && tau_from_json(k.at("tau_witness")) == tau0, path,
                       "reference witness differs from tau0");
                node(k, path + "/0");
            }
            bool all_zero = true;
            const json& rec = data.at("classes");
            std::size_t idx = 0;
            const int c = static_cast<int>(sha.components.size());
            for (unsigned long mask = 1; c > 1 && mask < (1ul << (c - 1)); ++mask, ++idx) {
                int delta = 0;
                for (int comp = 1; comp < c; ++comp) {
                    if (!(mask & (1ul << (comp - 1)))) continue;
                    for (int v : sha.components[comp]) {
                        const ZPoly& f = sha.vertices[v];
                        const int nf = sha.exponents[v];
                        int st = f.degree() * nf, s0 = f.degree() * nf;
                        for (const auto& [key, val] : tau->values)
                            if (key.parent == f) st -= val;
                        for (const auto& [key, val] : tau0.values)
                            if (key.parent == f) s0 -= val;
                        delta ^= w2(st / 2) ^ w2(s0 / 2);
                    }
                }
                if (delta) all_zero = false;
                expect(idx < rec.size() && rec[idx].at("delta").get<int>() == delta, path,
                       "delta of class " + std::to_string(idx) + " differs");
            }
            expect(idx == rec.size(), path, "class count differs");
            expect(verdict == (all_zero ? "YES" : "NO"), path, "verdict disagrees with the deltas");
        } else if (rule == "None") {
            expect(verdict == "UNDETERMINED", path, "rule None must be UNDETERMINED");
        } else {
            fail(path, "unknown rule " + rule);
        }
    }

    void yes_leaf(const ZPoly& F, int r, int s, const std::string& path) {
        Local l = local_conditions(F);
        expect(l.c1, path, "C1 fails");
        expect(l.z2, path, "2-adic condition fails");
        expect(l.odd, path, "local condition fails at an odd prime");
        expect(c2_holds(F, r, s), path, "C2 fails");
        expect(mod8(r - s) == 0, path, "r != s (mod 8)");
    }
};

}  // namespace

ReplayResult replay_certificate(const json& cert) {
    Replayer rp;
    rp.node(cert, "$");
    return rp.result;
}

}  // namespace k3iso
