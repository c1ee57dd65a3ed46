#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3iso/zpoly.hpp"

namespace k3iso {

struct FactorDecomposition {
    // Signed content; +-1 for primitive input.
    ZInt unit = 1;
    // Primitive irreducible factors with positive leading coefficient, canonical order.
    std::vector<std::pair<ZPoly, int>> factors;

    ZPoly reconstruct() const;
};

// Yun. Parts are primitive, squarefree, pairwise coprime. When f is not
// primitive with positive leading coefficient, a leading constant part
// (c, 1) is included so that the product still reconstructs f.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);

FactorDecomposition factor_over_z(const ZPoly& f);
bool is_irreducible_z(const ZPoly& f);

// m with f = Phi_m, if any.
std::optional<unsigned> cyclotomic_index(const ZPoly& f);

unsigned euler_phi(unsigned m);

}  // namespace k3iso
