#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3iso/rootloc.hpp"
#include "k3iso/zpoly.hpp"

namespace k3iso {

// Stable name of an element of Irr_R(F): parent factor, kind, ordinal.
struct HandleKey {
    ZPoly parent;
    HandleKind kind = HandleKind::Quad;
    int ordinal = 1;

    friend bool operator<(const HandleKey& a, const HandleKey& b);
    friend bool operator==(const HandleKey& a, const HandleKey& b) {
        return a.parent == b.parent && a.kind == b.kind && a.ordinal == b.ordinal;
    }
};

HandleKey key_of(const RealQuadHandle& h);

struct IrrEntry {
    RealQuadHandle handle;
    int factor_index = 0;  // 1-based index in the canonical factorization of F
    int exponent = 1;      // n_P
    int weight = 1;        // deg(P) * n_P
};

// X - 1, X + 1 and the unit-circle quadratics of the type-1 factors, in canonical
// factor order, quads by ordinal.
std::vector<IrrEntry> irr_real(const ZPoly& F);

struct MilnorIndex {
    std::map<HandleKey, int> values;

    int sum() const;
    bool has(const HandleKey& k) const { return values.count(k) != 0; }
    int at(const HandleKey& k) const;
    friend bool operator==(const MilnorIndex& a, const MilnorIndex& b) { return a.values == b.values; }
};

// Restriction to the handles whose parent divides block.
MilnorIndex restrict_to(const MilnorIndex& tau, const std::vector<IrrEntry>& handles);

// Membership in Mil_{r,s}(F). Beyond the range and parity constraints, a quadratic
// handle of multiplicity n carries the index of a rank-n hermitian form, so tau = 2n (mod 4).
bool mil_member(const MilnorIndex& tau, const ZPoly& F, int r, int s, std::string* why = nullptr);
// Same, throwing InvalidMilnorIndex with the reason.
void require_mil(const MilnorIndex& tau, const ZPoly& F, int r, int s);

// +weight at the chosen handle, -weight at every other handle of F.
MilnorIndex tau_flip(const ZPoly& F, const HandleKey& chosen);
MilnorIndex make_tau_delta(const ZPoly& S, const ZPoly& F, int ordinal);
MilnorIndex make_tau_zeta(const ZPoly& F, const HandleKey& handle);
// -2 at every quadratic of S; X - 1 gets the value that makes the total r - s = -16.
MilnorIndex make_tau_one(const ZPoly& S, const ZPoly& F);
MilnorIndex make_tau_definite(const ZPoly& F, int r, int s);

// Some element of Mil_{r,s}(F), chosen greedily (largest admissible value first).
std::optional<MilnorIndex> some_tau(const ZPoly& F, int r, int s);

std::string handle_label(const IrrEntry& e);

}  // namespace k3iso
