#include "doctest.h"

#include "lclab/certlab.hpp"

using namespace lclab;

TEST_SUITE("certlab") {

TEST_CASE("the k = 0 identity is u d1 + v d2 + w d3 = 0")
{
    TwoByThree m(CoefficientRing::integers());
    CHECK((m.u * m.d1 + m.v * m.d2 + m.w * m.d3).is_zero());
    auto r = verify_2x3_identity(0);
    CHECK(r.success);
    CHECK(r.summands == 1);
}

TEST_CASE("the binomial identity vanishes for k <= 4")
{
    for (unsigned k = 1; k <= 4; ++k) {
        auto r = verify_2x3_identity(k);
        CHECK(r.success);
        CHECK(r.residual.to_string() == "0");
        CHECK(r.summands == (k + 1) * (k + 2) / 2);
        CHECK(r.max_summand_terms > 0);
    }
}

TEST_CASE("mod-p reductions")
{
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        auto r = verify_2x3_modp_reduction(p, e);
        CHECK(r.coefficients_vanish);
        CHECK(r.surviving_pairs == std::vector<std::pair<unsigned, unsigned>>{{0, 0}});
        CHECK(r.surviving_term_matches);
        CHECK(r.bracket_is_frobenius_power);
        CHECK(r.relation_vanishes);
        CHECK(r.success);
    }
    CHECK_THROWS_AS(verify_2x3_modp_reduction(2, 4), VerdictWithheld);
    CHECK_THROWS_AS(verify_2x3_modp_reduction(4, 1), InvalidInput);
}

TEST_CASE("Barile certificate")
{
    auto r = barile_certificate();
    CHECK(r.identity_residual.is_zero());
    CHECK(r.success);
    REQUIRE(r.records.size() == 5);
    for (const auto& rec : r.records) {
        CHECK(rec.found);
        CHECK(rec.verified);
        CHECK(rec.power <= 4);
    }
    CHECK(r.records[4].power == 2);
}

TEST_CASE("Valla certificate")
{
    auto r = valla_certificate(6);
    CHECK(r.identity_residual.is_zero());
    CHECK(r.success);
    REQUIRE(r.records.size() == 5);
    CHECK(r.records[0].found);
    for (const auto& rec : r.records) CHECK(rec.power <= 3);
    CHECK_THROWS_AS(valla_certificate(5), InvalidInput);
}

}
