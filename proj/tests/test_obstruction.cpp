#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3iso/errors.hpp"
#include "k3iso/obstruction.hpp"
#include "k3iso/polyparse.hpp"

using namespace k3iso;

namespace {
ZPoly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("factor types") {
    auto t = classify_factors(P("(x-1)^4 (x+1)^2 (x^4-x^2+1) (x^2-x-1)(x^2+x-1)"));
    CHECK(t.n_xm1 == 4);
    CHECK(t.n_xp1 == 2);
    REQUIRE(t.i1.size() == 1);
    CHECK(t.i1[0].first == P("x^4-x^2+1"));
    REQUIRE(t.type2.size() == 1);
    CHECK(t.type2[0].g * t.type2[0].gstar == P("x^4-3x^2+1"));
    CHECK(t.reassemble() == P("(x-1)^4 (x+1)^2 (x^4-x^2+1) (x^2-x-1)(x^2+x-1)"));
}

TEST_CASE("classification rejects non-symmetric input") {
    CHECK_THROWS_AS(classify_factors(P("x^2-x-1")), Error);
    CHECK_THROWS_AS(classify_factors(P("x^3+x")), Error);
}

TEST_CASE("Pi sets") {
    auto w = pi_set(P("x-1"), P("x+1"));
    REQUIRE(w.size() == 1);
    CHECK(w[0].p == 2);
    auto e = pi_set(cyclotomic(12), P("x-1"));
    CHECK(e.empty());  // Res = 1
    auto z7 = pi_set(cyclotomic(7), P("x-1"));
    REQUIRE(z7.size() == 1);
    CHECK(z7[0].p == 7);
    CHECK_THROWS_AS(pi_set(P("x-1"), P("x-1")), Error);
}

TEST_CASE("obstruction group of Phi12 (X-1)^4") {
    auto g = sha_group(P("(x^4-x^2+1)(x-1)^4"));
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.empty());
    CHECK(g.components.size() == 2);
    CHECK(g.rank == 1);
    auto cl = sha_nontrivial_classes(g);
    REQUIRE(cl.size() == 1);
    CHECK(cl[0] == std::vector<int>{0, 1});
}

TEST_CASE("connected graph has trivial group") {
    auto g = sha_group(P("(x-1)^2 (x+1)^2"));
    CHECK(g.rank == 0);
    CHECK(sha_nontrivial_classes(g).empty());
    CHECK(sha_group(P("(x-1)^2 (x^6+x^5+x^4+x^3+x^2+x+1)")).rank == 0);
}

TEST_CASE("three isolated vertices give three nonzero classes") {
    // X - 1, Phi12, and the Salem factor lambda_18 with Res(S, Phi12) = 169 but no symmetric witness
    const ZPoly S = ZPoly{1, -1, 1, -1, 0, 0, -1, 1, -1, 1, -1, 1, -1, 0, 0, -1, 1, -1, 1};
    auto g = sha_group(S * cyclotomic(12) * P("(x-1)^2"));
    CHECK(g.vertices.size() == 3);
    CHECK(g.components.size() == 3);
    CHECK(g.rank == 2);
    auto cl = sha_nontrivial_classes(g);
    CHECK(cl.size() == 3);
    for (auto& c : cl) CHECK(c[0] == 0);
}
