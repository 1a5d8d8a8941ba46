#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace lclab {

/// Thrown for malformed input: bad parameters, parse failures, ring mismatches.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation stopped at a configured bound (stage, size or degree) without a verdict.
class VerdictWithheld : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);
void require_prime(std::uint64_t p, const char* what);

/// Exact C(n, k); zero when k > n.
mpz_class big_binomial(std::uint64_t n, std::uint64_t k);

/// C(a, k) for any integer a: a(a-1)...(a-k+1)/k!.
mpz_class generalized_binomial(const mpz_class& a, std::uint64_t k);

/// Base-p digits of d, least significant first. Empty for d = 0.
struct DigitVector {
    std::uint64_t base = 2;
    std::vector<std::uint64_t> digits;

    mpz_class value() const;
    std::uint64_t digit(std::size_t e) const { return e < digits.size() ? digits[e] : 0; }
};

DigitVector base_p_digits(std::uint64_t d, std::uint64_t p);
DigitVector base_p_digits(const mpz_class& d, std::uint64_t p);

/// C(d, k) mod p, computed digitwise (Lucas).
std::uint64_t binom_mod_p(std::uint64_t d, std::uint64_t k, std::uint64_t p);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// Reduce an arbitrary integer into [0, p).
std::uint64_t reduce_mod(const mpz_class& a, std::uint64_t p);

/// p^e, throwing on overflow of 64 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

/// Returns e with q == p^e, or -1.
int p_power_exponent(std::uint64_t q, std::uint64_t p);

} // namespace lclab
