#include "doctest.h"

#include <random>

#include "lclab/poly.hpp"

using namespace lclab;

namespace {

const auto ZZ = CoefficientRing::integers();

Poly P(const std::string& s, CoefficientRing r, int n)
{
    return Poly::parse(s, r, n);
}

Poly random_homogeneous(std::mt19937_64& rng, CoefficientRing r, int n, int d, int nterms)
{
    Poly g(r, n);
    for (int k = 0; k < nterms; ++k) {
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < d; ++j) e[rng() % static_cast<unsigned>(n)] += 1;
        g.add_term(e, static_cast<long>(rng() % 11) - 5);
    }
    return g;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("arithmetic examples")
{
    CHECK((P("x1 + x2", ZZ, 2) * P("x1 - x2", ZZ, 2)) == P("x1^2 - x2^2", ZZ, 2));
    auto x1 = Poly::variable(ZZ, 2, 1);
    CHECK(P("x1*x2", ZZ, 2).substitute({x1, x1}) == P("x1^2", ZZ, 2));
    auto F2 = CoefficientRing::prime_field(2);
    CHECK(P("x1 + x2", F2, 2).pow(2) == P("x1^2 + x2^2", F2, 2));
    CHECK_THROWS_AS(P("x1", ZZ, 2) + P("x1", F2, 2), InvalidInput);
    CHECK_THROWS_AS(P("x3", ZZ, 2), InvalidInput);
    CHECK_THROWS_AS(P("x1 +* x2", ZZ, 2), InvalidInput);
}

TEST_CASE("canonical text round trip")
{
    for (const char* s : {"3*x1^2*x2 - x3", "5 - x1^-2", "x1*x2*x3 + 2*x1 - 7", "0", "1/2*x1 - 3/4"}) {
        auto g = P(s, CoefficientRing::rationals(), 3);
        CHECK(g.to_string() == s);
        CHECK(P(g.to_string(), CoefficientRing::rationals(), 3) == g);
    }
    auto g = P("x2 + x1^2 - 1", CoefficientRing::prime_field(5), 2);
    CHECK(g.to_string() == "x1^2 + x2 + 4");
    CHECK(g.leading_exponent() == Exponent{2, 0});
}

TEST_CASE("divided powers")
{
    CHECK(apply_divided_power(1, 2, P("x1^5", ZZ, 1)) == P("10*x1^3", ZZ, 1));
    CHECK(apply_divided_power(1, 1, P("x1^-1", ZZ, 1)) == P("-x1^-2", ZZ, 1));
    CHECK(apply_divided_power(1, 3, P("x1^2", ZZ, 1)).is_zero());
}

TEST_CASE("divided powers compose")
{
    for (auto r : {ZZ, CoefficientRing::prime_field(3), CoefficientRing::prime_field(2)})
        for (int a = -4; a <= 7; ++a)
            for (unsigned s = 0; s <= 3; ++s)
                for (unsigned t = 0; t <= 3; ++t) {
                    auto m = Poly::monomial(r, 2, {a, 1}, 1);
                    auto lhs = apply_divided_power(1, s, apply_divided_power(1, t, m));
                    auto rhs = apply_divided_power(1, s + t, m).scale(big_binomial(s + t, s));
                    REQUIRE(lhs == rhs);
                }
}

TEST_CASE("Euler operator examples")
{
    CHECK(euler_apply(1, P("x1^2*x2", ZZ, 2)) == P("3*x1^2*x2", ZZ, 2));
    auto F2 = CoefficientRing::prime_field(2);
    CHECK(euler_apply(2, P("x1*x2*x3", F2, 3)) == P("x1*x2*x3", F2, 3));
    auto F3 = CoefficientRing::prime_field(3);
    CHECK(euler_apply(1, P("x1^-1*x2^-1", F3, 2)) == P("x1^-1*x2^-1", F3, 2));
}

TEST_CASE("Eulerian identity on random homogeneous polynomials")
{
    std::mt19937_64 rng(7);
    const std::uint64_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 60; ++trial) {
        auto r = CoefficientRing::prime_field(primes[trial % 3]);
        int n = 2 + static_cast<int>(rng() % 3);
        int d = static_cast<int>(rng() % 7);
        auto g = random_homogeneous(rng, r, n, d, 4);
        for (unsigned k = 1; k <= 4; ++k)
            REQUIRE(euler_apply(k, g) == g.scale(binom_mod_p(static_cast<std::uint64_t>(d), k, r.p)));
    }
}

TEST_CASE("Frobenius is additive and bracket powers")
{
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        auto r = CoefficientRing::prime_field(p);
        auto g = random_homogeneous(rng, r, 3, 2, 4);
        auto h = random_homogeneous(rng, r, 3, 3, 4);
        CHECK((g + h).pow(p) == g.pow(p) + h.pow(p));
        CHECK(bracket_power({g}, p)[0] == g.pow(p));
        CHECK(bracket_power({g}, p * p)[0] == g.pow(p * p));
    }
    auto F2 = CoefficientRing::prime_field(2);
    CHECK(bracket_power({P("x1 + x2", F2, 2)}, 2)[0] == P("x1^2 + x2^2", F2, 2));
    auto F3 = CoefficientRing::prime_field(3);
    auto b = bracket_power({P("x1", F3, 2), P("x2", F3, 2)}, 3);
    CHECK(b[0] == P("x1^3", F3, 2));
    CHECK(b[1] == P("x2^3", F3, 2));
    CHECK_THROWS_AS(bracket_power({P("x1", F3, 2)}, 2), InvalidInput);
}

TEST_CASE("ring changes")
{
    auto g = P("3*x1 + 4*x2", ZZ, 2);
    CHECK(g.change_ring(CoefficientRing::prime_field(3)) == P("x2", CoefficientRing::prime_field(3), 2));
    CHECK_THROWS_AS(P("1/2*x1", CoefficientRing::rationals(), 1).change_ring(ZZ), InvalidInput);
    CHECK(g.widen(3).nvars() == 3);
    CHECK(P("x1^2 + x1*x2", ZZ, 2).is_homogeneous());
    CHECK_FALSE(P("x1^2 + x2", ZZ, 2).is_homogeneous());
}

}
