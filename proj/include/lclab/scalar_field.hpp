#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lclab/exactarith.hpp"

namespace lclab {

/// F_p with p < 2^31, elements stored as residues in [0, p).
struct PrimeField {
    using Elem = std::uint32_t;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime)
    {
        require_prime(prime, "prime field");
        if (prime >= (1ULL << 31)) throw InvalidInput("prime field characteristic too large");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Elem>(s >= p ? s - p : s);
    }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>(a >= b ? a - b : a + p - b); }
    Elem neg(Elem a) const { return static_cast<Elem>(a == 0 ? 0 : p - a); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p); }
    Elem inv(Elem a) const { return static_cast<Elem>(mod_inverse(a, p)); }
    /// a - b*c
    Elem sub_mul(Elem a, Elem b, Elem c) const { return sub(a, mul(b, c)); }
    Elem from_mpq(const mpq_class& c) const
    {
        std::uint64_t den = reduce_mod(c.get_den(), p);
        if (den == 0) throw InvalidInput("denominator divisible by the characteristic");
        return static_cast<Elem>(reduce_mod(c.get_num(), p) * mod_inverse(den, p) % p);
    }
    mpq_class to_mpq(Elem a) const { return mpq_class(static_cast<unsigned long>(a)); }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

/// Q with exact fractions, normalized after every operation.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    Elem sub_mul(const Elem& a, const Elem& b, const Elem& c) const { return a - b * c; }
    Elem from_mpq(const mpq_class& c) const { return c; }
    mpq_class to_mpq(const Elem& a) const { return a; }
    std::string name() const { return "QQ"; }
};

} // namespace lclab
