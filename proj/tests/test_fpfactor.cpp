#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "k3iso/errors.hpp"
#include "k3iso/fpfactor.hpp"
#include "k3iso/polyparse.hpp"
#include "oracles.hpp"

using namespace k3iso;

namespace {
ZPoly P(const char* s) { return parse_poly(s); }
const ZPoly kS18 = ZPoly{1, -1, 1, -1, 0, 0, -1, 1, -1, 1, -1, 1, -1, 0, 0, -1, 1, -1, 1};
}  // namespace

TEST_CASE("primality on u64") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(13));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("field arithmetic") {
    CHECK(fp::invm(6, 13) == 11);
    CHECK(fp::mulm(fp::invm(12345, 1000003), 12345, 1000003) == 1);
    CHECK(fp::powm(2, 12, 13) == 1);
    const u64 big = 18446744073709551557ull;
    CHECK(fp::mulm(big - 1, big - 1, big) == 1);
}

TEST_CASE("reduction and symmetric lift") {
    CHECK_THROWS_AS(reduce_mod(P("x+1"), 15), Error);
    FpPoly r = reduce_mod(P("x^2-1"), 7);
    CHECK(r.coeffs() == std::vector<u64>{6, 0, 1});
    CHECK(lift_symmetric(r) == P("x^2-1"));
    CHECK(lift_symmetric(reduce_mod(P("x^2+6x-4"), 13)) == P("x^2+6x-4"));
}

TEST_CASE("known factorizations") {
    auto f12 = factor_mod_p(reduce_mod(cyclotomic(12), 13));
    REQUIRE(f12.size() == 4);
    for (auto& [h, e] : f12) {
        CHECK(h.degree() == 1);
        CHECK(e == 1);
    }
    CHECK(std::any_of(f12.begin(), f12.end(), [](auto& pe) { return pe.first == FpPoly(13, {6, 1}); }));
    CHECK(std::any_of(f12.begin(), f12.end(), [](auto& pe) { return pe.first == FpPoly(13, {11, 1}); }));

    auto f7 = factor_mod_p(reduce_mod(cyclotomic(7), 7));
    REQUIRE(f7.size() == 1);
    CHECK(f7[0].first == FpPoly(7, {6, 1}));
    CHECK(f7[0].second == 6);

    auto f2 = factor_mod_p(reduce_mod(P("x^2-1"), 2));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == FpPoly(2, {1, 1}));
    CHECK(f2[0].second == 2);
}

TEST_CASE("star mod p and symmetric products") {
    CHECK(star_mod_p(FpPoly(13, {6, 1})) == FpPoly(13, {11, 1}));
    CHECK(fp::mul(FpPoly(13, {6, 1}), FpPoly(13, {11, 1})) == FpPoly(13, {1, 4, 1}));
    CHECK(is_symmetric_mod_p(FpPoly(13, {1, 4, 1})));
    CHECK_FALSE(is_symmetric_mod_p(FpPoly(13, {6, 1})));
    CHECK_THROWS_AS(star_mod_p(FpPoly(13, {0, 1})), Error);
}

TEST_CASE("common symmetric factors") {
    auto w = common_symmetric_irreducible_factors(cyclotomic(7), P("x-1"), 7);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == FpPoly(7, {6, 1}));
    CHECK(common_symmetric_irreducible_factors(kS18, cyclotomic(12), 13).empty());
    auto all = common_irreducible_factors(kS18, cyclotomic(12), 13);
    REQUIRE(all.size() == 2);
    CHECK(all[0].factor == FpPoly(13, {6, 1}));
    CHECK(all[1].factor == FpPoly(13, {11, 1}));
}

TEST_CASE("lambda_18 modulo 13, frozen") {
    auto f = factor_mod_p(reduce_mod(kS18, 13));
    std::vector<std::string> got;
    for (auto& [h, e] : f) got.push_back(h.str() + "^" + std::to_string(e));
    // frozen; agrees with an independent computer algebra system
    CHECK(got == std::vector<std::string>{"x + 6^1", "x + 11^1",
                                          "x^8 + 10*x^7 + 8*x^6 + x^5 + 8*x^4 + 2*x^3 + 10*x^2 + x + 6^1",
                                          "x^8 + 11*x^7 + 6*x^6 + 9*x^5 + 10*x^4 + 11*x^3 + 10*x^2 + 6*x + 11^1"});
}

TEST_CASE("random factorizations multiply back, factors irreducible by trial") {
    std::mt19937_64 rng(41);
    const std::vector<u64> primes{2, 3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> dd(1, 8);
    for (int t = 0; t < 200; ++t) {
        const u64 p = primes[t % primes.size()];
        std::uniform_int_distribution<u64> cd(0, p - 1);
        const int d = dd(rng);
        std::vector<u64> c(d + 1);
        for (auto& x : c) x = cd(rng);
        c[d] = 1;
        FpPoly f(p, c);
        FpPoly prod = fp::one(p);
        for (auto& [h, e] : factor_mod_p(f)) {
            CHECK(oracle::irreducible_by_trial(h.coeffs(), p));
            CHECK(is_irreducible_mod_p(h));
            for (int k = 0; k < e; ++k) prod = fp::mul(prod, h);
        }
        CHECK(prod == f);
    }
}

TEST_CASE("gcd and xgcd") {
    const u64 p = 101;
    FpPoly a = reduce_mod(P("(x-3)(x+4)(x^2+1)"), p), b = reduce_mod(P("(x-3)(x^2+1)(x+9)"), p);
    FpPoly s, t;
    FpPoly g = fp::xgcd(a, b, s, t);
    CHECK(g == reduce_mod(P("(x-3)(x^2+1)"), p));
    CHECK(fp::add(fp::mul(s, a), fp::mul(t, b)) == g);
}
