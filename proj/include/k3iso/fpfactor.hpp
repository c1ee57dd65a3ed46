#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "k3iso/zpoly.hpp"

namespace k3iso {

using u64 = std::uint64_t;

bool is_prime_u64(u64 n);

// Polynomial over F_p, ascending residues in [0, p), no trailing zeros.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(u64 p, std::vector<u64> coeffs);  // residues are reduced mod p

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    u64 lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }
    friend bool canonical_less(const FpPoly& a, const FpPoly& b);

    std::string str() const;

private:
    void normalize();
    u64 p_ = 2;
    std::vector<u64> c_;
};

bool canonical_less(const FpPoly& a, const FpPoly& b);

namespace fp {

u64 addm(u64 a, u64 b, u64 p);
u64 subm(u64 a, u64 b, u64 p);
u64 mulm(u64 a, u64 b, u64 p);
u64 powm(u64 a, u64 e, u64 p);
u64 invm(u64 a, u64 p);

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, u64 k);
void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly monic(const FpPoly& a);
FpPoly gcd(const FpPoly& a, const FpPoly& b);
// g = gcd(a, b) monic, s a + t b = g
FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t);
FpPoly derivative(const FpPoly& a);
FpPoly powmod(const FpPoly& a, u64 e, const FpPoly& m);
FpPoly one(u64 p);
FpPoly x(u64 p);

}  // namespace fp

// Throws NotPrime for composite p.
FpPoly reduce_mod(const ZPoly& f, u64 p);
// Symmetric lift to (-p/2, p/2].
ZPoly lift_symmetric(const FpPoly& f);

// Monic irreducible factors with multiplicity, canonically sorted.
std::vector<std::pair<FpPoly, int>> factor_mod_p(const FpPoly& f);
bool is_irreducible_mod_p(const FpPoly& f);

// h(0)^-1 X^deg h(1/X); throws ZeroConstantTerm when h(0) = 0.
FpPoly star_mod_p(const FpPoly& h);
bool is_symmetric_mod_p(const FpPoly& h);

struct CommonFactor {
    FpPoly factor;
    bool symmetric = false;
};

// Every monic irreducible common divisor of f mod p and g mod p.
std::vector<CommonFactor> common_irreducible_factors(const ZPoly& f, const ZPoly& g, u64 p);
// The symmetric ones among them (X itself excluded).
std::vector<FpPoly> common_symmetric_irreducible_factors(const ZPoly& f, const ZPoly& g, u64 p);

}  // namespace k3iso
