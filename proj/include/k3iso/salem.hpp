#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3iso/decide.hpp"
#include "k3iso/fpfactor.hpp"
#include "k3iso/rootloc.hpp"
#include "k3iso/zpoly.hpp"

namespace k3iso {

struct SalemInfo {
    ZPoly S;
    int degree = 0;
    ZInt s1, sm1;  // S(1), S(-1)
    std::vector<RealQuadHandle> handles;
    QInterval dominant_root;

    // Throws NotSalem unless is_salem(S).
    static SalemInfo from(const ZPoly& S);
    const RealQuadHandle& handle(int ordinal) const;
};

enum class Realizability { Realizable, NotRealizable, Unknown };
const char* realizability_name(Realizability r);

struct RealizabilityWitness {
    ZPoly F;
    std::string rule;
    std::optional<MilnorIndex> tau;
    std::optional<DecisionCertificate> certificate;
    std::string note;
};

struct RealizabilityVerdict {
    Realizability status = Realizability::Unknown;
    std::vector<RealizabilityWitness> witnesses;
    std::vector<std::string> notes;
    std::string reason;
};

// F0 = S (X-1)^(22-d) with the index tau_delta at the quad of the given ordinal.
RealizabilityVerdict complemented_realizable(const SalemInfo& S, int delta = 1);
// Case analysis over F0 and the pair F+ = S(X+1)^2(X-1)^(20-d), F- = S(X^2-1)(X-1)^(20-d).
RealizabilityVerdict salem_realizable(const SalemInfo& S, int delta = 1);
// (alpha^2, delta^2) through S2 = graeffe_square(S).
RealizabilityVerdict square_realizable(const SalemInfo& S, int delta = 1);

bool exceptional_set_member(const SalemInfo& S, unsigned m);

// Ordinal of the quad of power_charpoly(S, k) carrying delta^k, where delta sits on the
// quad of S with the given ordinal.
int power_handle(const SalemInfo& S, int ordinal, unsigned k);

struct PowerEntry {
    unsigned k = 1;
    bool certified = false;
    std::string rule;  // "salem_realizable", "double_power", "even_power" or empty
    ZInt res_power;    // Res(S, X^k - 1)
    std::vector<std::pair<unsigned, ZInt>> res_cyclotomic;  // Res(S, Phi_j) for j | k
    std::optional<RealizabilityVerdict> witness;
    std::string note;
};

std::vector<PowerEntry> power_scan(const SalemInfo& S, int delta, unsigned K);

struct ComplementReport {
    std::vector<unsigned> cyclotomic;  // indices m of Phi_m, as a multiset
    ZPoly F;
    bool c1 = false;
    DecisionCertificate decision;  // tau_delta at (3,19)
};

struct Deg18Report {
    std::vector<ComplementReport> complements;
    int phi12_rank = 0;
    ZInt phi12_resultant;
    std::vector<std::pair<u64, std::vector<CommonFactor>>> phi12_common;  // per prime of |Res(S, Phi12)|
    std::vector<DecisionCertificate> phi12_tau_delta;  // one per quad of S
    std::optional<DecisionCertificate> phi12_tau_zeta;
    Realizability overall = Realizability::Unknown;
};

Deg18Report degree18_workflow(const SalemInfo& S);

}  // namespace k3iso
