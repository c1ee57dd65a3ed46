#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3iso/fpfactor.hpp"
#include "k3iso/zpoly.hpp"

namespace k3iso {

struct TypedFactors {
    int n_xm1 = 0;  // exponent of X - 1
    int n_xp1 = 0;  // exponent of X + 1
    std::vector<std::pair<ZPoly, int>> i1;
    struct Pair {
        ZPoly g, gstar;
        int n = 0;
    };
    std::vector<Pair> type2;

    ZPoly reassemble() const;
};

// F monic symmetric with F(0) != 0.
TypedFactors classify_factors(const ZPoly& F);

struct PiWitness {
    ZInt p;
    std::vector<FpPoly> factors;
};

// Primes p dividing Res(f, g) at which f and g share an irreducible symmetric factor mod p.
std::vector<PiWitness> pi_set(const ZPoly& f, const ZPoly& g);

struct ShaEdge {
    int a = 0, b = 0;
    std::vector<PiWitness> pi;
};

struct ShaGroup {
    // X - 1, X + 1 (when present), then the type-1 factors in canonical order.
    std::vector<ZPoly> vertices;
    std::vector<int> exponents;
    std::vector<ShaEdge> edges;
    // Components in order of their smallest vertex.
    std::vector<std::vector<int>> components;
    int rank = 0;
};

ShaGroup sha_group(const ZPoly& F);

// One 0/1 vector over the vertices per nonzero class of the obstruction group. The
// component holding vertex 0 is always 0 in the chosen representative.
std::vector<std::vector<int>> sha_nontrivial_classes(const ShaGroup& sha);
std::vector<std::vector<int>> sha_nontrivial_classes(const ZPoly& F);

}  // namespace k3iso
