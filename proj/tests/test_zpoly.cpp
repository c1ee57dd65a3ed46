#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3iso/errors.hpp"
#include "k3iso/polyparse.hpp"
#include "k3iso/zpoly.hpp"
#include "oracles.hpp"

using namespace k3iso;

namespace {
ZPoly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("construction trims and reports degree") {
    CHECK(ZPoly{1, 2, 0, 0}.degree() == 1);
    CHECK(ZPoly{}.is_zero());
    CHECK(ZPoly{}.degree() == -1);
    CHECK(ZPoly{0, 0}.is_zero());
    CHECK(ZPoly{-1, 1}.str() == "x - 1");
}

TEST_CASE("evaluation") {
    CHECK(cyclotomic(7).eval(ZInt(1)) == 7);
    CHECK(cyclotomic(7).eval(ZInt(-1)) == 1);
    CHECK(P("(x^4-x^2+1)(x-1)^4").eval(ZInt(-1)) == 16);
    CHECK(P("x^2-2").sign_at(QNum(3, 2)) == 1);
    CHECK(P("x^2-2").sign_at(QNum(7, 5)) == -1);
}

TEST_CASE("multiplication expands Phi12 (X-1)^4") {
    ZPoly F = ZPoly{1, 0, -1, 0, 1} * pow(ZPoly{-1, 1}, 4);
    CHECK(F == ZPoly{1, -4, 5, 0, -4, 0, 5, -4, 1});
}

TEST_CASE("star and symmetry") {
    CHECK(star(ZPoly{-1, 1}) == ZPoly{-1, 1});
    CHECK(star(ZPoly{1, 1, 2}) == ZPoly{2, 1, 1});
    CHECK(is_symmetric(cyclotomic(12)));
    CHECK(is_symmetric(ZPoly{-1, 1}));
    CHECK_FALSE(is_symmetric(ZPoly{1, 1, 2}));
    CHECK(is_palindromic(ZPoly{1, -3, 1}));
    CHECK_FALSE(is_palindromic(ZPoly{-1, 1}));
}

TEST_CASE("division") {
    ZPoly f = P("x^3-1");
    CHECK(exact_divide(f, ZPoly{-1, 1}) == P("x^2+x+1"));
    CHECK_THROWS_AS(exact_divide(f, P("x+2")), Error);
    CHECK_THROWS_AS(exact_divide(f, ZPoly{}), Error);
    ZPoly q, r;
    pseudo_divrem(P("x^3+1"), P("2x+1"), q, r);
    CHECK(q * P("2x+1") + r == P("x^3+1") * ZInt(8));
    monic_divrem(P("x^4+3x+2"), P("x^2+1"), q, r);
    CHECK(q * P("x^2+1") + r == P("x^4+3x+2"));
    CHECK(r.degree() < 2);
}

TEST_CASE("content, primitive part, derivative") {
    CHECK(content(P("6x^2+4")) == 2);
    CHECK(primitive_part(P("-6x^2-4")) == P("3x^2+2"));
    CHECK(derivative(P("x^3+2x")) == P("3x^2+2"));
}

TEST_CASE("resultant values and sign") {
    CHECK(abs(resultant(ZPoly{-1, 1}, ZPoly{1, 1})) == 2);
    CHECK(resultant(P("x^2+1"), P("x^2+1")) == 0);
    CHECK(resultant(P("x^2+1"), ZPoly{3}) == 9);
}

TEST_CASE("resultant against the Sylvester determinant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dd(1, 7);
    for (int t = 0; t < 150; ++t) {
        auto a = oracle::random_poly(rng, dd(rng), 6, false);
        auto b = oracle::random_poly(rng, dd(rng), 6, false);
        CHECK(resultant(ZPoly(a), ZPoly(b)) == oracle::sylvester_resultant(a, b));
    }
}

TEST_CASE("resultant multiplicativity, swap sign, and evaluation at a root") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> dd(1, 5);
    std::uniform_int_distribution<long> cd(-9, 9);
    for (int t = 0; t < 200; ++t) {
        ZPoly f(oracle::random_poly(rng, dd(rng), 5, false));
        ZPoly g(oracle::random_poly(rng, dd(rng), 5, false));
        ZPoly h(oracle::random_poly(rng, dd(rng), 5, false));
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
        const int sgn = (f.degree() * g.degree()) % 2 ? -1 : 1;
        CHECK(resultant(g, f) == resultant(f, g) * sgn);
        const long a = cd(rng);
        ZPoly m(oracle::random_poly(rng, dd(rng), 5, true));
        CHECK(abs(resultant(m, ZPoly{-a, 1})) == abs(m.eval(ZInt(a))));
    }
}

TEST_CASE("gcd over Z") {
    CHECK(gcd_z(P("(x-1)(x+2)"), P("(x-1)(x+3)")) == P("x-1"));
    CHECK(gcd_z(P("x^2+1"), P("x+1")).degree() == 0);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ZPoly{-1, 1});
    CHECK(cyclotomic(2) == ZPoly{1, 1});
    CHECK(cyclotomic(12) == ZPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic(105).coeff(7) == -2);
    // X^n - 1 is the product over divisors
    for (unsigned n = 1; n <= 36; ++n) {
        ZPoly prod{1};
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == ZPoly::monomial(1, n) - ZPoly{1});
    }
}

TEST_CASE("graeffe square and power charpoly") {
    CHECK(graeffe_square(P("x^2-3x+1")) == P("x^2-7x+1"));
    CHECK(power_charpoly(P("x^2-3x+1"), 3) == P("x^2-18x+1"));
    CHECK(power_charpoly(P("x^2-3x+1"), 2) == graeffe_square(P("x^2-3x+1")));
    ZPoly s = P("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
    CHECK(power_charpoly(s, 6) == power_charpoly(power_charpoly(s, 2), 3));
    CHECK(power_charpoly(s, 4) == graeffe_square(graeffe_square(s)));
    CHECK(power_charpoly(cyclotomic(5), 5) == pow(ZPoly{-1, 1}, 4));
}

TEST_CASE("trace polynomial") {
    CHECK(trace_poly(P("x^4-x^2+1")) == P("x^2-3"));
    CHECK(trace_poly(P("x^2+1")) == P("x"));
    CHECK(trace_poly(P("x^2-3x+1")) == P("x-3"));
    CHECK(untrace_poly(P("x^2-3")) == P("x^4-x^2+1"));
    CHECK_THROWS_AS(trace_poly(P("x^2+x+2")), Error);
    for (unsigned m = 3; m <= 40; ++m) CHECK(untrace_poly(trace_poly(cyclotomic(m))) == cyclotomic(m));
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(ZInt(0)));
    CHECK(is_perfect_square(ZInt(169)));
    CHECK_FALSE(is_perfect_square(ZInt(-4)));
    CHECK_FALSE(is_perfect_square(ZInt(168)));
}

TEST_CASE("canonical order") {
    CHECK(canonical_less(P("x+5"), P("x^2")));
    CHECK(canonical_less(P("x-1"), P("x+1")));
    CHECK_FALSE(canonical_less(P("x+1"), P("x+1")));
}

TEST_CASE("parser") {
    CHECK(P("(x^4 − x^2 + 1)(x-1)^4") == ZPoly{1, -4, 5, 0, -4, 0, 5, -4, 1});
    CHECK(P("2x^3 - -x") == P("2*x^3+x"));
    CHECK(P("-(x+1)^2") == ZPoly{-1, -2, -1});
    CHECK(P("3") == ZPoly{3});
    try {
        parse_poly("x^-2");
        FAIL("expected failure");
    } catch (const ParseFailure& e) {
        CHECK(e.kind() == ErrorKind::NegativeExponent);
    }
    try {
        parse_poly("x + 1.5");
        FAIL("expected failure");
    } catch (const ParseFailure& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerCoefficient);
    }
    try {
        parse_poly("x + ) 1");
        FAIL("expected failure");
    } catch (const ParseFailure& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(e.offset() == 4);
    }
}
