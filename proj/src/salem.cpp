#include "k3iso/salem.hpp"

#include <algorithm>

#include "k3iso/errors.hpp"
#include "k3iso/intfactor.hpp"
#include "k3iso/milnor.hpp"
#include "k3iso/obstruction.hpp"
#include "k3iso/zfactor.hpp"

namespace k3iso {

using nlohmann::json;

namespace {

const ZPoly kXm1{-1, 1};
const ZPoly kXp1{1, 1};

ZInt abs_z(const ZInt& z) { return z < 0 ? ZInt(-z) : z; }

// V_k with V_k(z + 1/z) = z^k + z^-k.
ZPoly chebyshev_v(unsigned k) {
    ZPoly a = ZPoly::constant(2), b = ZPoly::x();
    if (k == 0) return a;
    for (unsigned i = 1; i < k; ++i) {
        ZPoly c = ZPoly::x() * b - a;
        a = b;
        b = c;
    }
    return b;
}

QInterval interval_eval(const ZPoly& f, const QNum& lo, const QNum& hi) {
    QInterval acc{QNum(0), QNum(0)};
    for (int i = f.degree(); i >= 0; --i) {
        QNum p[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
        acc.lo = *std::min_element(p, p + 4);
        acc.hi = *std::max_element(p, p + 4);
        acc.lo += QNum(f.coeff(i));
        acc.hi += QNum(f.coeff(i));
    }
    return acc;
}

DecisionCertificate decide_tau_delta(const ZPoly& S, const ZPoly& F, int ordinal) {
    return decide_exists(F, 3, 19, make_tau_delta(S, F, ordinal));
}

// For F(0) = -1 the engine does not apply; S is still split off orthogonally since
// |Res(S, C)| = 1, and tau_delta fixes its signature.
DecisionCertificate forced_split_by_signature(const ZPoly& S, const ZPoly& C, const MilnorIndex& tau) {
    const ZPoly F = S * C;
    DecisionCertificate c;
    c.block = F;
    c.r = 3;
    c.s = 19;
    c.tau = tau;
    const ZInt res = resultant(S, C);
    int sum_s = restrict_to(tau, irr_real(S)).sum();
    const int rs = (S.degree() + sum_s) / 2;
    const int ss = S.degree() - rs;
    json splits = json::array();
    c.data = {{"G", poly_json(S)}, {"H", poly_json(C)}, {"G_poly", S.str()}, {"H_poly", C.str()},
              {"resultant", zint_json(res)}, {"splits", splits}, {"r_G", rs}, {"s_G", ss}};
    if ((res == 1 || res == -1) && ((rs - ss) % 8 + 8) % 8 != 0) {
        c.verdict = Verdict::No;
        c.rule = Rule::ForcedSplitExhausted;
    } else {
        c.verdict = Verdict::Undetermined;
        c.rule = Rule::None;
        c.data["reason"] = "F(0) = -1 outside the decision engine";
    }
    return c;
}

void require_range(const SalemInfo& S, int lo, int hi) {
    if (S.degree < lo || S.degree > hi)
        throw Error(ErrorKind::InvalidQuery, "Salem degree " + std::to_string(S.degree) + " outside [" +
                                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

const char* realizability_name(Realizability r) {
    switch (r) {
    case Realizability::Realizable: return "REALIZABLE";
    case Realizability::NotRealizable: return "NOT_REALIZABLE";
    case Realizability::Unknown: return "UNKNOWN";
    }
    return "?";
}

SalemInfo SalemInfo::from(const ZPoly& S) {
    if (!is_salem(S)) throw Error(ErrorKind::NotSalem, S.str() + " is not a Salem polynomial");
    SalemInfo info;
    info.S = S;
    info.degree = S.degree();
    info.s1 = S.eval(ZInt(1));
    info.sm1 = S.eval(ZInt(-1));
    info.handles = quad_handles(S);
    ZInt bound = 1;
    for (const auto& c : S.coeffs()) bound = std::max(bound, abs_z(c));
    info.dominant_root = real_root_approx(S, QNum(1), QNum(bound + 1), QNum(1, 1000000) / 1000000);
    return info;
}

const RealQuadHandle& SalemInfo::handle(int ordinal) const {
    if (ordinal < 1 || ordinal > static_cast<int>(handles.size()))
        throw Error(ErrorKind::InvalidQuery, "delta ordinal " + std::to_string(ordinal) + " out of range 1.." +
                                                 std::to_string(handles.size()));
    return handles[ordinal - 1];
}

RealizabilityVerdict complemented_realizable(const SalemInfo& S, int delta) {
    require_range(S, 4, 22);
    S.handle(delta);
    const int d = S.degree;
    RealizabilityVerdict v;
    const ZPoly F = S.S * pow(kXm1, 22 - d);
    C1Evidence c1 = check_c1(F);
    if (!c1.ok) {
        v.status = Realizability::Unknown;
        v.reason = "condition C1 fails for S(X)(X-1)^" + std::to_string(22 - d) + "; other complements may exist";
        return v;
    }
    std::string rule;
    if (d == 22) rule = "(i) deg S = 22";
    else if (abs_z(S.s1) > 1) rule = "(ii) |S(1)| > 1";
    else if (d % 8 == 6) rule = "(iii) |S(1)| = 1 and d = -2 (mod 8)";

    RealizabilityWitness w;
    w.F = F;
    w.tau = make_tau_delta(S.S, F, delta);
    w.certificate = decide_exists(F, 3, 19, w.tau);
    if (rule.empty()) {
        v.status = Realizability::NotRealizable;
        v.reason = "|S(1)| = 1 and d != -2 (mod 8): tau_delta is not attained on this complement";
        w.rule = "no tau_delta isometry";
    } else {
        v.status = Realizability::Realizable;
        v.reason = rule;
        w.rule = rule;
    }
    v.witnesses.push_back(std::move(w));
    return v;
}

RealizabilityVerdict salem_realizable(const SalemInfo& S, int delta) {
    require_range(S, 4, 20);
    S.handle(delta);
    const int d = S.degree;
    const bool sm1_square = is_perfect_square(S.sm1);
    RealizabilityVerdict v;
    if (sm1_square) {
        RealizabilityVerdict c = complemented_realizable(S, delta);
        if (c.status == Realizability::Realizable) return c;
        v.status = Realizability::Unknown;
        v.reason = "S(-1) is a square but F0 = S(X-1)^" + std::to_string(22 - d) + " is not realizable: " + c.reason;
        return v;
    }
    if (d == 20 && !is_perfect_square(abs_z(S.s1))) {
        v.status = Realizability::Unknown;
        v.reason = "d = 20 with neither |S(1)| nor |S(-1)| a square";
        return v;
    }
    // S(-1) > 1 is not a square: F+ carries a YES certificate, and one of F+ or F- is realized
    RealizabilityWitness plus;
    plus.F = S.S * pow(kXp1, 2) * pow(kXm1, 20 - d);
    plus.rule = "F+ = S(X+1)^2(X-1)^" + std::to_string(20 - d);
    plus.tau = make_tau_delta(S.S, plus.F, delta);
    plus.certificate = decide_exists(plus.F, 3, 19, plus.tau);
    RealizabilityWitness minus;
    minus.F = S.S * ZPoly{-1, 0, 1} * pow(kXm1, 20 - d);
    minus.rule = "F- = S(X^2-1)(X-1)^" + std::to_string(20 - d);
    minus.note = "determinant -1 complement; no lattice certificate";
    v.status = Realizability::Realizable;
    v.reason = "S(-1) is not a square";
    v.notes.push_back("F₊ or F₋");
    v.witnesses.push_back(std::move(plus));
    v.witnesses.push_back(std::move(minus));
    return v;
}

int power_handle(const SalemInfo& S, int ordinal, unsigned k) {
    const ZPoly Sk = power_charpoly(S.S, k);
    std::vector<RealQuadHandle> target = quad_handles(Sk);
    RealQuadHandle h = S.handle(ordinal);
    const ZPoly V = chebyshev_v(k);
    QNum width = (h.hi - h.lo) / 2;
    for (int iter = 0; iter < 400; ++iter) {
        QInterval J = interval_eval(V, h.lo, h.hi);
        int hit = 0, count = 0;
        for (const auto& t : target) {
            if (t.hi >= J.lo && t.lo <= J.hi) {
                hit = t.ordinal;
                ++count;
            }
        }
        if (count == 1) return hit;
        h = refine_handle(h, width);
        for (auto& t : target) t = refine_handle(t, width);
        width /= 2;
    }
    throw Error(ErrorKind::NotIsolated, "could not match delta^" + std::to_string(k) + " to a quad of the power");
}

RealizabilityVerdict square_realizable(const SalemInfo& S, int delta) {
    require_range(S, 4, 20);
    S.handle(delta);
    RealizabilityVerdict v;
    const ZInt prod = abs_z(S.s1 * S.sm1);
    if (prod == 1) {
        v.status = Realizability::Unknown;
        v.reason = "|S(1)S(-1)| = 1 (unramified)";
        return v;
    }
    const ZPoly S2 = graeffe_square(S.S);
    if (!is_irreducible_z(S2)) throw Error(ErrorKind::PowerDegenerate, "alpha^2 has smaller degree than alpha");
    const ZInt a = S2.eval(ZInt(1)), b = S2.eval(ZInt(-1));
    if (!is_perfect_square(abs_z(b)) || abs_z(a) <= 1) {
        v.status = Realizability::Unknown;
        v.reason = "S2 fails |S2(-1)| square or |S2(1)| > 1";
        return v;
    }
    const int d2 = power_handle(S, delta, 2);
    RealizabilityWitness w;
    w.F = S2 * pow(kXm1, 22 - S.degree);
    w.rule = "S2(X)(X-1)^" + std::to_string(22 - S.degree) + ", |S2(1)| = " + abs_z(a).get_str();
    w.tau = make_tau_delta(S2, w.F, d2);
    w.certificate = decide_exists(w.F, 3, 19, w.tau);
    w.note = "delta^2 on quad " + std::to_string(d2) + " of S2";
    v.status = Realizability::Realizable;
    v.reason = "|S(1)S(-1)| = " + prod.get_str() + " > 1";
    v.witnesses.push_back(std::move(w));
    return v;
}

bool exceptional_set_member(const SalemInfo& S, unsigned m) {
    if (m == 0) throw Error(ErrorKind::InvalidQuery, "m must be positive");
    ZPoly xm = ZPoly::monomial(ZInt(1), m) - ZPoly::constant(1);
    return abs_z(resultant(S.S, xm)) == 1;
}

std::vector<PowerEntry> power_scan(const SalemInfo& S, int delta, unsigned K) {
    if (K < 1) throw Error(ErrorKind::InvalidQuery, "K must be at least 1");
    S.handle(delta);
    std::vector<PowerEntry> out;
    for (unsigned k = 1; k <= K; ++k) {
        PowerEntry e;
        e.k = k;
        e.res_power = resultant(S.S, ZPoly::monomial(ZInt(1), k) - ZPoly::constant(1));
        for (unsigned j = 1; j <= k; ++j)
            if (k % j == 0) e.res_cyclotomic.emplace_back(j, resultant(S.S, cyclotomic(j)));
        if (k == 1) {
            if (S.degree >= 4 && S.degree <= 20) {
                RealizabilityVerdict v = salem_realizable(S, delta);
                e.certified = v.status == Realizability::Realizable;
                if (e.certified) e.rule = "salem_realizable";
                else e.note = "no certificate: " + v.reason;
                e.witness = std::move(v);
            } else {
                e.note = "no certificate";
            }
        } else if (k % 2 == 0 && !exceptional_set_member(S, k)) {
            // 2m in E forces m in E, so k/2 outside E already gives k outside E
            const unsigned m = k / 2;
            e.rule = exceptional_set_member(S, m) ? "even_power" : "double_power";
            const ZPoly Sm = power_charpoly(S.S, m);
            SalemInfo Pm = SalemInfo::from(Sm);
            const int dm = m == 1 ? delta : power_handle(S, delta, m);
            RealizabilityVerdict v = square_realizable(Pm, dm);
            e.certified = v.status == Realizability::Realizable;
            if (!e.certified) e.note = "no certificate: " + v.reason;
            e.witness = std::move(v);
        } else {
            e.note = "no certificate";
        }
        out.push_back(std::move(e));
    }
    return out;
}

Deg18Report degree18_workflow(const SalemInfo& S) {
    if (S.degree != 18) throw Error(ErrorKind::NotUnramifiedDeg18, "degree is " + std::to_string(S.degree) + ", not 18");
    if (abs_z(S.s1 * S.sm1) != 1) throw Error(ErrorKind::NotUnramifiedDeg18, "|S(1)S(-1)| != 1");
    for (unsigned m : {1u, 2u, 3u, 4u, 6u}) {
        if (abs_z(resultant(S.S, cyclotomic(m))) != 1)
            throw Error(ErrorKind::NotUnramifiedDeg18, "|Res(S, Phi_" + std::to_string(m) + ")| != 1");
    }
    Deg18Report rep;
    const std::vector<unsigned> pool{1, 2, 3, 4, 6, 5, 8, 10, 12};
    std::vector<std::vector<unsigned>> multisets;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, std::size_t from, unsigned left) -> void {
        if (left == 0) {
            multisets.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            const unsigned ph = euler_phi(pool[i]);
            if (ph > left) continue;
            cur.push_back(pool[i]);
            self(self, i, left - ph);
            cur.pop_back();
        }
    };
    rec(rec, 0, 4);

    bool any_yes = false, all_no = true;
    for (const auto& ms : multisets) {
        ComplementReport cr;
        cr.cyclotomic = ms;
        ZPoly C = ZPoly::constant(1);
        for (unsigned m : ms) C *= cyclotomic(m);
        cr.F = S.S * C;
        cr.c1 = check_c1(cr.F).ok;
        if (cr.F.constant_term() == 1) cr.decision = decide_tau_delta(S.S, cr.F, 1);
        else cr.decision = forced_split_by_signature(S.S, C, make_tau_delta(S.S, cr.F, 1));
        if (cr.decision.verdict == Verdict::Yes) any_yes = true;
        if (cr.decision.verdict != Verdict::No) all_no = false;
        rep.complements.push_back(std::move(cr));
    }

    const ZPoly phi12 = cyclotomic(12);
    const ZPoly F = S.S * phi12;
    rep.phi12_rank = sha_group(F).rank;
    rep.phi12_resultant = resultant(S.S, phi12);
    for (const auto& [p, e] : factor_integer(rep.phi12_resultant)) {
        (void)e;
        if (!p.fits_ulong_p()) throw Error(ErrorKind::FactorizationIncomplete, "prime too large: " + p.get_str());
        rep.phi12_common.emplace_back(p.get_ui(), common_irreducible_factors(S.S, phi12, p.get_ui()));
    }
    for (std::size_t i = 1; i <= S.handles.size(); ++i) {
        DecisionCertificate c = decide_tau_delta(S.S, F, static_cast<int>(i));
        if (c.verdict == Verdict::Yes) any_yes = true;
        if (c.verdict != Verdict::No) all_no = false;
        rep.phi12_tau_delta.push_back(std::move(c));
    }
    rep.phi12_tau_zeta = decide_exists(F, 3, 19, make_tau_zeta(F, {phi12, HandleKind::Quad, 1}));

    if (any_yes) rep.overall = Realizability::Realizable;
    else if (all_no && rep.phi12_rank != 0) rep.overall = Realizability::NotRealizable;
    else rep.overall = Realizability::Unknown;
    return rep;
}

}  // namespace k3iso
