#include "doctest.h"

#include <random>

#include "lclab/exactarith.hpp"

using namespace lclab;

TEST_SUITE("exactarith") {

TEST_CASE("big_binomial small values")
{
    CHECK(big_binomial(5, 2) == 10);
    CHECK(big_binomial(7, 4) == 35);
    CHECK(big_binomial(0, 0) == 1);
    CHECK(big_binomial(3, 5) == 0);
    CHECK(big_binomial(60, 30) == mpz_class("118264581564861424"));
}

TEST_CASE("generalized binomial with negative top")
{
    CHECK(generalized_binomial(-1, 1) == -1);
    CHECK(generalized_binomial(-1, 2) == 1);
    CHECK(generalized_binomial(-2, 3) == -4);
    CHECK(generalized_binomial(2, 3) == 0);
}

TEST_CASE("base-p digits")
{
    CHECK(base_p_digits(5, 2).digits == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(base_p_digits(0, 7).digits.empty());
    CHECK(base_p_digits(35, 3).digits == std::vector<std::uint64_t>{2, 2, 0, 1});
    CHECK(base_p_digits(mpz_class(35), 3).value() == 35);
    CHECK_THROWS_AS(base_p_digits(5, 4), InvalidInput);
}

TEST_CASE("binom_mod_p lemma cases")
{
    CHECK(binom_mod_p(5, 2, 2) == 0);
    CHECK(binom_mod_p(5, 1, 2) == 1);
    CHECK(binom_mod_p(35, 4, 3) == reduce_mod(big_binomial(35, 4), 3));
}

TEST_CASE("binom_mod_p agrees with exact binomial on random inputs")
{
    std::mt19937_64 rng(20240611);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 300; ++trial) {
        std::uint64_t p = primes[rng() % 4];
        std::uint64_t d = rng() % (1u << 12);
        std::uint64_t k = rng() % (d + 2);
        CHECK(binom_mod_p(d, k, p) == reduce_mod(big_binomial(d, k), p));
    }
}

TEST_CASE("binom(d, p^e) is the e-th digit")
{
    for (std::uint64_t p : {2u, 3u})
        for (std::uint64_t d = 0; d < 6561; ++d) {
            auto digits = base_p_digits(d, p);
            for (unsigned e = 0; e <= 4; ++e)
                REQUIRE(binom_mod_p(d, checked_pow(p, e), p) == digits.digit(e) % p);
        }
}

TEST_CASE("helpers")
{
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(reduce_mod(mpz_class(-1), 5) == 4);
    CHECK(p_power_exponent(8, 2) == 3);
    CHECK(p_power_exponent(6, 2) == -1);
    CHECK_THROWS_AS(checked_pow(10, 30), InvalidInput);
}

}
