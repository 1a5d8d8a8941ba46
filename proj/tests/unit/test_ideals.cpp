#include "doctest.h"

#include <bit>

#include "fixtures.hpp"
#include "lclab/ideals.hpp"

using namespace lclab;

namespace {

const auto ZZ = CoefficientRing::integers();
const auto QQ = CoefficientRing::rationals();

std::vector<std::vector<int>> diagonal_subsets(int n, int t)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != t) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_SUITE("ideals") {

TEST_CASE("minors")
{
    CHECK(minors_ideal(2, 2, 2, ZZ) == fixtures::parse_all({"x1*x4 - x2*x3"}, ZZ, 4));
    CHECK(minors_ideal(2, 3, 2, ZZ) == fixtures::minors_2x3(ZZ));
    CHECK(minors_ideal(2, 3, 1, ZZ) == fixtures::parse_all({"x1", "x2", "x3", "x4", "x5", "x6"}, ZZ, 6));
    CHECK_THROWS_AS(minors_ideal(2, 3, 3, ZZ), InvalidInput);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int t = 1; t <= std::min(m, n); ++t) {
                auto g = minors_ideal(m, n, t, ZZ);
                REQUIRE(g.size() == mpz_class(big_binomial(m, t) * big_binomial(n, t)).get_ui());
                for (const auto& p : g) {
                    REQUIRE(p.is_homogeneous());
                    REQUIRE(p.degree() == t);
                }
            }
    // first-row Laplace: 3x3 determinant has 6 terms
    CHECK(minors_ideal(3, 3, 3, ZZ)[0].size() == 6);
}

TEST_CASE("Pfaffians")
{
    CHECK(pfaffians_ideal(2, 2, ZZ) == fixtures::parse_all({"x1"}, ZZ, 1));
    CHECK(pfaffians_ideal(4, 4, ZZ) == fixtures::parse_all({"x1*x6 - x2*x5 + x3*x4"}, ZZ, 6));
    CHECK(pfaffians_ideal(3, 2, ZZ) == fixtures::parse_all({"x1", "x2", "x3"}, ZZ, 3));
    CHECK_THROWS_AS(pfaffians_ideal(5, 3, ZZ), InvalidInput);
    for (int n = 2; n <= 6; ++n)
        for (int t = 2; t <= n; t += 2) {
            auto g = pfaffians_ideal(n, t, ZZ);
            REQUIRE(g.size() == big_binomial(n, t).get_ui());
            for (const auto& p : g) REQUIRE((p.is_homogeneous() && p.degree() == t / 2));
        }
    for (int n = 2; n <= 5; ++n) {
        auto a = alternating_matrix(n, ZZ);
        for (int t : {2, 4}) {
            if (t > n) continue;
            for (const auto& s : diagonal_subsets(n, t)) {
                std::vector<std::vector<Poly>> sub;
                for (int r : s) {
                    std::vector<Poly> row;
                    for (int c : s) row.push_back(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                    sub.push_back(row);
                }
                REQUIRE(pfaffian(sub).pow(2) == determinant(sub));
            }
        }
    }
}

TEST_CASE("symmetric minors, Stanley-Reisner ideals and B_{d,t}")
{
    CHECK(symmetric_minors_ideal(2, 2, ZZ) == fixtures::parse_all({"x1*x3 - x2^2"}, ZZ, 3));
    CHECK(symmetric_minors_ideal(3, 2, ZZ).size() == 9);
    CHECK(symmetric_variable(3, 2, 3) == 5);
    CHECK(symmetric_variable(3, 3, 3) == 6);
    CHECK(alternating_variable(4, 3, 4) == 6);
    CHECK(stanley_reisner(6, rp2_nonfaces(), ZZ) == fixtures::rp2_ideal(ZZ));
    CHECK(hypersurface_Bdt(3, 2) == Poly::parse("x1^2*x2^2*x3^2 - x1^3*x4 - x2^3*x5 - x3^3*x6", ZZ, 6));
    CHECK_THROWS_AS(stanley_reisner(3, {0}, ZZ), InvalidInput);
}

TEST_CASE("family specs")
{
    auto g = IdealFamilySpec::parse("generic m=2 n=3 t=2");
    CHECK(g.nvars() == 6);
    CHECK(g.to_string() == "generic m=2 n=3 t=2");
    CHECK(g.generators(ZZ) == fixtures::minors_2x3(ZZ));
    auto sr = IdealFamilySpec::parse("sr n=6 nonfaces=RP2");
    CHECK(sr.to_string() == "sr n=6 nonfaces=[123,124,135,146,156,236,245,256,345,346]");
    CHECK(IdealFamilySpec::parse(sr.to_string()).nonfaces == sr.nonfaces);
    CHECK(IdealFamilySpec::parse("bdt d=3 t=2").generators(ZZ).size() == 1);
    CHECK(IdealFamilySpec::parse("alternating n=6 t=4").nvars() == 15);
    CHECK(IdealFamilySpec::parse("symmetric n=4 t=3").nvars() == 10);
    for (auto bad : {"generic m=2 n=3", "generic m=2 n=3 t=4", "alternating n=6 t=3", "cubic n=3",
                     "generic m=2 n=3 t=2 q=1", "generic m=2 n=x t=2", "sr n=4 nonfaces=15"})
        CHECK_THROWS_AS(IdealFamilySpec::parse(bad), InvalidInput);
}

TEST_CASE("closed-form invariants")
{
    auto a = family_invariants(IdealFamilySpec::parse("generic m=2 n=3 t=2"), 0);
    CHECK(a.height == 2);
    CHECK(a.ara == 3);
    CHECK(a.critical_index == 3);
    auto b = family_invariants(IdealFamilySpec::parse("alternating n=6 t=4"), 0);
    CHECK(b.height == 6);
    CHECK(b.ara == 10);
    auto c = family_invariants(IdealFamilySpec::parse("symmetric n=4 t=3"), 0);
    CHECK(c.height == 3);
    CHECK(c.ara == 5);
    auto d = family_invariants(IdealFamilySpec::parse("symmetric n=4 t=2"), 2);
    CHECK(d.ara == 6 - 1 + 1);
    CHECK(family_invariants(IdealFamilySpec::parse("symmetric n=4 t=2"), 3).ara == 10 - 3 + 1);
    CHECK_THROWS_AS(family_invariants(IdealFamilySpec::parse("bdt d=2 t=1"), 0), InvalidInput);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int t = 1; t <= std::min(m, n); ++t) {
                IdealFamilySpec s;
                s.m = m;
                s.n = n;
                s.t = t;
                auto f = family_invariants(s, 0);
                REQUIRE(f.ara - f.height >= 0);
            }
}

TEST_CASE("vanishing predictions")
{
    auto g = IdealFamilySpec::parse("generic m=2 n=3 t=2");
    auto v = vanishing_predict(5, g);
    CHECK(v.applicable);
    CHECK(v.vanishes);
    CHECK(v.index == 3);
    CHECK_FALSE(vanishing_predict(6, g).vanishes);
    CHECK_FALSE(vanishing_predict(1, IdealFamilySpec::parse("generic m=2 n=2 t=2")).applicable);
    CHECK_FALSE(vanishing_predict(1, IdealFamilySpec::parse("symmetric n=4 t=2")).applicable);
    auto s = vanishing_predict(9, IdealFamilySpec::parse("symmetric n=4 t=3"));
    CHECK((s.applicable && s.vanishes && s.index == 5));
    auto p = vanishing_predict(14, IdealFamilySpec::parse("alternating n=6 t=4"));
    CHECK((p.applicable && p.vanishes && p.index == 10));
    CHECK_FALSE(vanishing_predict(3, IdealFamilySpec::parse("alternating n=4 t=2")).applicable);
}

TEST_CASE("localization lemma certificates")
{
    auto a = localization_check(2, 2, 2, 1, 4);
    CHECK(a.success);
    REQUIRE(a.forward.size() == 1);
    CHECK(a.forward[0].multipliers[0] == Poly::parse("x1", QQ, 4));
    auto b = localization_check(2, 3, 2, 2, 6);
    CHECK(b.success);
    CHECK(b.forward.size() == 3);
    CHECK(b.backward.size() == 2);
    for (const auto& r : b.forward) CHECK(r.verified);
    auto c = localization_check(3, 3, 2, 0, 6);
    CHECK_FALSE(c.success);
    CHECK_FALSE(c.failure.empty());
}

}
