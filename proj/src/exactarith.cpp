#include "lclab/exactarith.hpp"

#include <string>

namespace lclab {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f <= n / f; f += 2)
        if (n % f == 0) return false;
    return true;
}

void require_prime(std::uint64_t p, const char* what)
{
    if (!is_prime(p))
        throw InvalidInput(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

mpz_class big_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class generalized_binomial(const mpz_class& a, std::uint64_t k)
{
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

mpz_class DigitVector::value() const
{
    mpz_class v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = v * base + *it;
    return v;
}

DigitVector base_p_digits(std::uint64_t d, std::uint64_t p)
{
    require_prime(p, "base_p_digits");
    DigitVector out{p, {}};
    while (d != 0) {
        out.digits.push_back(d % p);
        d /= p;
    }
    return out;
}

DigitVector base_p_digits(const mpz_class& d, std::uint64_t p)
{
    require_prime(p, "base_p_digits");
    if (d < 0) throw InvalidInput("base_p_digits: negative input");
    DigitVector out{p, {}};
    mpz_class q = d;
    while (q != 0) {
        mpz_class r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p);
        out.digits.push_back(r.get_ui());
    }
    return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    unsigned __int128 r = 1 % mod, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) throw std::domain_error("mod_inverse: zero has no inverse");
    return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_mod(const mpz_class& a, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t binom_mod_p(std::uint64_t d, std::uint64_t k, std::uint64_t p)
{
    require_prime(p, "binom_mod_p");
    std::uint64_t result = 1;
    while (d != 0 || k != 0) {
        std::uint64_t dd = d % p, kk = k % p;
        if (kk > dd) return 0;
        // small binomial C(dd, kk) mod p with dd < p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < kk; ++i) {
            num = static_cast<std::uint64_t>((unsigned __int128)num * ((dd - i) % p) % p);
            den = static_cast<std::uint64_t>((unsigned __int128)den * ((i + 1) % p) % p);
        }
        std::uint64_t c = static_cast<std::uint64_t>((unsigned __int128)num * mod_inverse(den, p) % p);
        result = static_cast<std::uint64_t>((unsigned __int128)result * c % p);
        d /= p;
        k /= p;
    }
    return result;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) throw InvalidInput("integer power overflows 64 bits");
        r *= p;
    }
    return r;
}

int p_power_exponent(std::uint64_t q, std::uint64_t p)
{
    if (q == 0 || p < 2) return -1;
    int e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    return q == 1 ? e : -1;
}

} // namespace lclab
