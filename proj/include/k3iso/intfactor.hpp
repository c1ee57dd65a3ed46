#pragma once

#include <utility>
#include <vector>

#include "k3iso/zpoly.hpp"

namespace k3iso {

// Prime factorization of |n| (n != 0): trial division up to 10^6, then Brent's
// variant of Pollard rho. Every reported prime passes a probabilistic test with
// 40 rounds; throws FactorizationIncomplete if rho gives up.
std::vector<std::pair<ZInt, int>> factor_integer(const ZInt& n);

// p-adic valuation of a nonzero integer.
int valuation(const ZInt& n, const ZInt& p);

}  // namespace k3iso
