#include "k3iso/decide.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "k3iso/errors.hpp"
#include "k3iso/intfactor.hpp"
#include "k3iso/rootloc.hpp"

namespace k3iso {

using nlohmann::json;

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::C1Fail: return "C1Fail";
    case Rule::C2Fail: return "C2Fail";
    case Rule::ShaZeroHasse: return "ShaZeroHasse";
    case Rule::PartitionSum: return "PartitionSum";
    case Rule::ForcedSplitExhausted: return "ForcedSplitExhausted";
    case Rule::ArchimedeanDelta: return "ArchimedeanDelta";
    case Rule::SpecialTheorem: return "SpecialTheorem";
    case Rule::None: return "None";
    }
    return "?";
}

C1Evidence check_c1(const ZPoly& F) {
    if (F.degree() < 0 || (F.degree() & 1))
        throw Error(ErrorKind::OddDegree, "condition C1 needs even degree, got " + F.str());
    C1Evidence ev;
    ev.f1 = F.eval(ZInt(1));
    ev.fm1 = F.eval(ZInt(-1));
    ev.twisted = ev.f1 * ev.fm1;
    if ((F.degree() / 2) & 1) ev.twisted = -ev.twisted;
    ev.ok = is_perfect_square(abs(ev.f1)) && is_perfect_square(abs(ev.fm1)) && is_perfect_square(ev.twisted);
    return ev;
}

C2Evidence check_c2(const ZPoly& F, int r, int s) {
    if (r < 0 || s < 0 || r + s != F.degree())
        throw Error(ErrorKind::SignatureMismatch,
                    "signature (" + std::to_string(r) + "," + std::to_string(s) + ") does not add up to deg F = " +
                        std::to_string(F.degree()));
    C2Evidence ev;
    ev.m = m_of(F);
    ev.parity_required = F.eval(ZInt(1)) * F.eval(ZInt(-1)) != 0;
    ev.ok = r >= ev.m && s >= ev.m;
    if (ev.parity_required) ev.ok = ev.ok && (ev.m % 2 == r % 2) && (r % 2 == s % 2);
    return ev;
}

bool local_unimodular_check(const ZPoly& F, const ZInt& p) {
    const ZInt f1 = F.eval(ZInt(1)), fm1 = F.eval(ZInt(-1));
    if (p == 2) return valuation(f1 * fm1, p) % 2 == 0;
    return valuation(f1, p) % 2 == 0 && valuation(fm1, p) % 2 == 0;
}

bool even_unimodular_z2_check(const ZPoly& F) {
    if (F.constant_term() != 1) throw Error(ErrorKind::BadConstantTerm, "the 2-adic check needs F(0) = 1");
    if (F.degree() & 1) throw Error(ErrorKind::OddDegree, "the 2-adic check needs even degree");
    const ZInt two = 2;
    const ZInt f1 = F.eval(ZInt(1)), fm1 = F.eval(ZInt(-1));
    if (valuation(f1, two) % 2 || valuation(fm1, two) % 2) return false;
    ZInt x = f1 * fm1;
    if (x == 0) return true;
    if ((F.degree() / 2) & 1) x = -x;
    const int v = valuation(x, two);
    if (v % 2) return false;
    ZInt u = x;
    mpz_fdiv_q_2exp(u.get_mpz_t(), u.get_mpz_t(), v);
    ZInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return r == 1 || r == 5;
}

namespace {

const ZPoly kXm1{-1, 1};
const ZPoly kXp1{1, 1};

int s_of(const ZPoly& f, int n, const MilnorIndex& tau) {
    int sum = 0;
    for (const auto& [k, v] : tau.values)
        if (k.parent == f) sum += v;
    return (f.degree() * n - sum) / 2;
}

int w2_real(int s) { return (s * (s - 1) / 2) & 1; }

}  // namespace

int archimedean_w2_delta(const ZPoly& F, int r, int s, const MilnorIndex& tau, const MilnorIndex& tau0,
                         const std::vector<int>& c) {
    ShaGroup sha = sha_group(F);
    bool has_m = false, has_p = false;
    for (const auto& v : sha.vertices) {
        if (v == kXm1) has_m = true;
        if (v == kXp1) has_p = true;
    }
    if (has_m && has_p)
        throw Error(ErrorKind::EpsilonFiniteMayVary, "both X-1 and X+1 divide F; the finite part may depend on tau");
    require_mil(tau, F, r, s);
    require_mil(tau0, F, r, s);
    if (c.size() != sha.vertices.size()) throw Error(ErrorKind::InvalidQuery, "class map has the wrong length");
    int delta = 0;
    for (std::size_t v = 0; v < sha.vertices.size(); ++v) {
        if (!c[v]) continue;
        const int a = s_of(sha.vertices[v], sha.exponents[v], tau);
        const int b = s_of(sha.vertices[v], sha.exponents[v], tau0);
        delta ^= w2_real(a) ^ w2_real(b);
    }
    return delta;
}

json zint_json(const ZInt& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

ZInt zint_from_json(const json& j) {
    if (j.is_string()) return ZInt(j.get<std::string>());
    return ZInt(j.get<long>());
}

json poly_json(const ZPoly& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(zint_json(c));
    return a;
}

ZPoly poly_from_json(const json& j) {
    std::vector<ZInt> c;
    for (const auto& x : j) c.push_back(zint_from_json(x));
    return ZPoly(std::move(c));
}

json tau_json(const MilnorIndex& t) {
    json a = json::array();
    for (const auto& [k, v] : t.values) {
        a.push_back({{"parent", poly_json(k.parent)},
                     {"kind", handle_kind_name(k.kind)},
                     {"ordinal", k.ordinal},
                     {"value", v}});
    }
    return a;
}

MilnorIndex tau_from_json(const json& j) {
    MilnorIndex t;
    for (const auto& e : j) {
        HandleKey k;
        k.parent = poly_from_json(e.at("parent"));
        const std::string kind = e.at("kind").get<std::string>();
        if (kind == "xm1") k.kind = HandleKind::XminusOne;
        else if (kind == "xp1") k.kind = HandleKind::XplusOne;
        else if (kind == "quad") k.kind = HandleKind::Quad;
        else throw Error(ErrorKind::InvalidQuery, "unknown handle kind " + kind);
        k.ordinal = e.at("ordinal").get<int>();
        t.values[k] = e.at("value").get<int>();
    }
    return t;
}

json certificate_json(const DecisionCertificate& c) {
    json j;
    j["verdict"] = verdict_name(c.verdict);
    j["rule"] = rule_name(c.rule);
    j["block"] = poly_json(c.block);
    j["poly"] = c.block.str();
    j["signature"] = {c.r, c.s};
    if (c.tau) j["tau"] = tau_json(*c.tau);
    if (c.tau_witness) j["tau_witness"] = tau_json(*c.tau_witness);
    j["data"] = c.data;
    json ch = json::array();
    for (const auto& k : c.children) ch.push_back(certificate_json(k));
    j["children"] = ch;
    return j;
}

namespace {

struct Atom {
    ZPoly base;  // irreducible factor, or g g* for a type-2 pair
    int n = 1;
    ZPoly poly;  // base^n
    std::vector<IrrEntry> handles;
};

class Engine {
public:
    Engine(const ZPoly& F, const std::optional<MilnorIndex>& tau) : tau_(tau) {
        TypedFactors t = classify_factors(F);
        if (t.n_xm1) add_atom(kXm1, t.n_xm1);
        if (t.n_xp1) add_atom(kXp1, t.n_xp1);
        for (const auto& [f, n] : t.i1) add_atom(f, n);
        for (const auto& p : t.type2) add_atom(p.g * p.gstar, p.n);
        const std::size_t k = atoms_.size();
        unit_res_.assign(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                ZInt r = resultant(atoms_[i].base, atoms_[j].base);
                unit_res_[i][j] = unit_res_[j][i] = (r == 1 || r == -1);
            }
    }

    unsigned full_mask() const { return (1u << atoms_.size()) - 1; }

    DecisionCertificate decide(unsigned mask, int r, bool use_tau) {
        auto key = std::make_tuple(mask, r, use_tau);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        DecisionCertificate c = compute(mask, r, use_tau);
        memo_.emplace(key, c);
        return c;
    }

private:
    void add_atom(const ZPoly& base, int n) {
        Atom a;
        a.base = base;
        a.n = n;
        a.poly = pow(base, n);
        a.handles = irr_real(a.poly);
        atoms_.push_back(std::move(a));
    }

    ZPoly poly_of(unsigned mask) const {
        ZPoly p = ZPoly::constant(1);
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (mask & (1u << i)) p *= atoms_[i].poly;
        return p;
    }

    int deg_of(unsigned mask) const {
        int d = 0;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (mask & (1u << i)) d += atoms_[i].poly.degree();
        return d;
    }

    std::vector<IrrEntry> handles_of(unsigned mask) const {
        std::vector<IrrEntry> h;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (mask & (1u << i)) h.insert(h.end(), atoms_[i].handles.begin(), atoms_[i].handles.end());
        return h;
    }

    MilnorIndex tau_of(unsigned mask) const { return restrict_to(*tau_, handles_of(mask)); }

    bool coprime_split(unsigned g, unsigned h) const {
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            if (!(g & (1u << i))) continue;
            for (std::size_t j = 0; j < atoms_.size(); ++j)
                if ((h & (1u << j)) && !unit_res_[i][j]) return false;
        }
        return true;
    }

    std::vector<std::pair<int, int>> splits(unsigned g, unsigned h, int r, bool use_tau) const {
        std::vector<std::pair<int, int>> out;
        const int dg = deg_of(g), dh = deg_of(h);
        auto ok8 = [](int rr, int d) { return ((2 * rr - d) % 8 + 8) % 8 == 0; };
        if (use_tau) {
            const int sg = tau_of(g).sum();
            if ((dg + sg) % 2) return out;
            const int rg = (dg + sg) / 2;
            const int rh = r - rg;
            if (rg < 0 || rg > dg || rh < 0 || rh > dh) return out;
            if (ok8(rg, dg) && ok8(rh, dh)) out.emplace_back(rg, rh);
            return out;
        }
        for (int rg = 0; rg <= dg; ++rg) {
            const int rh = r - rg;
            if (rh < 0 || rh > dh) continue;
            if (ok8(rg, dg) && ok8(rh, dh)) out.emplace_back(rg, rh);
        }
        return out;
    }

    std::vector<std::pair<unsigned, unsigned>> bipartitions(unsigned mask) const {
        std::vector<int> idx;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (mask & (1u << i)) idx.push_back(static_cast<int>(i));
        std::vector<std::pair<unsigned, unsigned>> out;
        if (idx.size() < 2) return out;
        const unsigned first = 1u << idx[0];
        const int rest = static_cast<int>(idx.size()) - 1;
        for (unsigned sub = 0; sub < (1u << rest) - 1; ++sub) {
            unsigned g = first;
            for (int b = 0; b < rest; ++b)
                if (sub & (1u << b)) g |= 1u << idx[b + 1];
            out.emplace_back(g, mask ^ g);
        }
        return out;
    }

    DecisionCertificate compute(unsigned mask, int r, bool use_tau) {
        DecisionCertificate c;
        c.block = poly_of(mask);
        c.r = r;
        c.s = c.block.degree() - r;
        const int s = c.s;
        if (use_tau) c.tau = tau_of(mask);

        // R1: local conditions at the finite places
        C1Evidence c1 = check_c1(c.block);
        const bool z2 = even_unimodular_z2_check(c.block);
        std::set<ZInt> primes{ZInt(2)};
        for (const ZInt& v : {c1.f1, c1.fm1})
            if (v != 0)
                for (const auto& pe : factor_integer(v)) primes.insert(pe.first);
        json local_fail = json::array();
        for (const auto& p : primes)
            if (!local_unimodular_check(c.block, p)) local_fail.push_back(zint_json(p));
        if (!c1.ok || !z2 || !local_fail.empty()) {
            c.verdict = Verdict::No;
            c.rule = Rule::C1Fail;
            c.data = {{"F(1)", zint_json(c1.f1)},
                      {"F(-1)", zint_json(c1.fm1)},
                      {"twisted", zint_json(c1.twisted)},
                      {"c1", c1.ok},
                      {"z2", z2},
                      {"local_failures", local_fail}};
            return c;
        }

        // R2: the real place
        C2Evidence c2 = check_c2(c.block, r, s);
        std::string why;
        std::optional<MilnorIndex> witness;
        bool mil_ok;
        if (use_tau) {
            mil_ok = mil_member(*c.tau, c.block, r, s, &why);
            if (mil_ok) witness = c.tau;
        } else {
            witness = some_tau(c.block, r, s);
            mil_ok = witness.has_value();
            if (!mil_ok) why = "Mil_{r,s}(F) is empty";
        }
        if (!c2.ok || !mil_ok) {
            c.verdict = Verdict::No;
            c.rule = Rule::C2Fail;
            c.data = {{"m", c2.m}, {"c2", c2.ok}, {"mil", mil_ok}};
            if (!why.empty()) c.data["reason"] = why;
            return c;
        }

        // R3: trivial obstruction group
        ShaGroup sha = sha_group(c.block);
        json comps = json::array();
        for (const auto& comp : sha.components) {
            json a = json::array();
            for (int v : comp) a.push_back(sha.vertices[v].str());
            comps.push_back(a);
        }
        if (sha.rank == 0) {
            c.verdict = Verdict::Yes;
            c.rule = Rule::ShaZeroHasse;
            c.tau_witness = witness;
            c.data = {{"sha_rank", 0}, {"components", comps}, {"m", c2.m}};
            return c;
        }

        // R4: orthogonal decomposition into blocks that each decide YES
        const auto parts = bipartitions(mask);
        for (const auto& [g, h] : parts) {
            for (const auto& [rg, rh] : splits(g, h, r, use_tau)) {
                DecisionCertificate cg = decide(g, rg, use_tau);
                if (cg.verdict != Verdict::Yes) continue;
                DecisionCertificate ch = decide(h, rh, use_tau);
                if (ch.verdict != Verdict::Yes) continue;
                c.verdict = Verdict::Yes;
                c.rule = Rule::PartitionSum;
                MilnorIndex w = *cg.tau_witness;
                for (const auto& kv : ch.tau_witness->values) w.values.insert(kv);
                c.tau_witness = w;
                c.data = {{"sha_rank", sha.rank},
                          {"split", {{"G", cg.block.str()}, {"H", ch.block.str()},
                                     {"r_G", rg}, {"s_G", cg.s}, {"r_H", rh}, {"s_H", ch.s}}}};
                c.children = {std::move(cg), std::move(ch)};
                return c;
            }
        }

        // R5: a split along a unit resultant is forced; if none of its signature splits works, NO
        bool undetermined_split = false;
        for (const auto& [g, h] : parts) {
            if (!coprime_split(g, h)) continue;
            json tried = json::array();
            std::vector<DecisionCertificate> failing;
            bool all_fail = true;
            for (const auto& [rg, rh] : splits(g, h, r, use_tau)) {
                DecisionCertificate cg = decide(g, rg, use_tau);
                if (cg.verdict == Verdict::No) {
                    tried.push_back({{"r_G", rg}, {"s_G", cg.s}, {"r_H", rh}, {"s_H", deg_of(h) - rh}, {"failed", "G"}});
                    failing.push_back(std::move(cg));
                    continue;
                }
                DecisionCertificate ch = decide(h, rh, use_tau);
                if (ch.verdict == Verdict::No) {
                    tried.push_back({{"r_G", rg}, {"s_G", cg.s}, {"r_H", rh}, {"s_H", ch.s}, {"failed", "H"}});
                    failing.push_back(std::move(ch));
                    continue;
                }
                all_fail = false;
                break;
            }
            if (!all_fail) {
                undetermined_split = true;
                continue;
            }
            ZPoly G = poly_of(g), H = poly_of(h);
            c.verdict = Verdict::No;
            c.rule = Rule::ForcedSplitExhausted;
            c.data = {{"sha_rank", sha.rank},
                      {"G", poly_json(G)},
                      {"H", poly_json(H)},
                      {"G_poly", G.str()},
                      {"H_poly", H.str()},
                      {"resultant", zint_json(resultant(G, H))},
                      {"splits", tried}};
            c.children = std::move(failing);
            return c;
        }

        // R6: compare the archimedean Hasse-Witt terms against a YES reference index
        bool has_m = false, has_p = false;
        for (const auto& v : sha.vertices) {
            if (v == kXm1) has_m = true;
            if (v == kXp1) has_p = true;
        }
        if (use_tau && !(has_m && has_p)) {
            DecisionCertificate ref = decide(mask, r, false);
            if (ref.verdict == Verdict::Yes) {
                const MilnorIndex& tau0 = *ref.tau_witness;
                json classes = json::array();
                bool all_zero = true;
                for (const auto& cls : sha_nontrivial_classes(sha)) {
                    int d = archimedean_w2_delta(c.block, r, s, *c.tau, tau0, cls);
                    if (d) all_zero = false;
                    classes.push_back({{"class", cls}, {"delta", d}});
                }
                json verts = json::array();
                for (const auto& v : sha.vertices) verts.push_back(v.str());
                c.verdict = all_zero ? Verdict::Yes : Verdict::No;
                c.rule = Rule::ArchimedeanDelta;
                if (all_zero) c.tau_witness = c.tau;
                c.data = {{"sha_rank", sha.rank},
                          {"vertices", verts},
                          {"tau0", tau_json(tau0)},
                          {"classes", classes}};
                c.children = {std::move(ref)};
                return c;
            }
        }

        c.verdict = Verdict::Undetermined;
        c.rule = Rule::None;
        std::string reason = "obstruction group of rank " + std::to_string(sha.rank) + " with no decisive split";
        if (undetermined_split) reason += "; a forced split has undetermined blocks";
        if (use_tau && has_m && has_p) reason += "; X-1 and X+1 both divide F";
        c.data = {{"sha_rank", sha.rank}, {"components", comps}, {"reason", reason}};
        return c;
    }

    std::vector<Atom> atoms_;
    std::vector<std::vector<bool>> unit_res_;
    std::optional<MilnorIndex> tau_;
    std::map<std::tuple<unsigned, int, bool>, DecisionCertificate> memo_;
};

}  // namespace

DecisionCertificate decide_exists(const ZPoly& F, int r, int s, const std::optional<MilnorIndex>& tau) {
    if (!F.is_monic()) throw Error(ErrorKind::InvalidQuery, "F must be monic");
    if (F.degree() < 2 || (F.degree() & 1)) throw Error(ErrorKind::InvalidQuery, "F must have positive even degree");
    if (F.constant_term() != 1) throw Error(ErrorKind::InvalidQuery, "F(0) must be 1");
    if (!is_symmetric(F)) throw Error(ErrorKind::InvalidQuery, "F must be symmetric");
    if (r < 0 || s < 0 || r + s != F.degree())
        throw Error(ErrorKind::InvalidQuery, "signature must satisfy r, s >= 0 and r + s = deg F");
    if (((r - s) % 8 + 8) % 8 != 0) throw Error(ErrorKind::InvalidQuery, "even unimodular lattices need r = s (mod 8)");
    if (tau) {
        std::set<HandleKey> known;
        for (const auto& e : irr_real(F)) known.insert(key_of(e.handle));
        std::set<HandleKey> given;
        for (const auto& kv : tau->values) given.insert(kv.first);
        if (known != given) throw Error(ErrorKind::InvalidQuery, "Milnor index must assign exactly the handles of F");
    }
    Engine e(F, tau);
    return e.decide(e.full_mask(), r, tau.has_value());
}

}  // namespace k3iso
